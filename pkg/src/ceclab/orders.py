"""Computable orders: nondecreasing unbounded maps N -> N.

Four concrete shapes are supported, each JSON-serializable:

    identity                      h(n) = n
    table(values, tail_slope)     finite table continued with a linear tail
    breakpoints(base, points)     h(p) = base + least i >= 1 with p <= p_i
    minclause(base, points)       h(p) = least n >= base with p <= p_n

Point lists are strictly increasing.  Where an order is backed by a finite
point list two completions exist: a slope-one tail (the list simply defines
the order, which stays total) or strict mode, where evaluation past the last
point means the order is only partially known and raises BudgetExhausted
instead of inventing values.  Breakpoint orders may also carry an extender
callback that grows the point list on demand; cover components use this to
synthesize breakpoints lazily.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .outcomes import BudgetExhausted


class ComputableOrder:
    def eval(self, n: int) -> int:
        raise NotImplementedError

    def inverse_threshold(self, m: int) -> int:
        """Least n with h(n) >= m; total because h is unbounded."""
        n = 0
        while self.eval(n) < m:
            n += 1
        return n

    def to_json(self) -> dict:
        raise NotImplementedError

    def describe(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass
class IdentityOrder(ComputableOrder):
    def eval(self, n: int) -> int:
        return n

    def inverse_threshold(self, m: int) -> int:
        return m

    def to_json(self) -> dict:
        return {"kind": "identity"}


@dataclass
class TableOrder(ComputableOrder):
    """Explicit values continued linearly: beyond the table the order grows
    by tail_slope (>= 1) per step, keeping it unbounded."""

    values: tuple[int, ...]
    tail_slope: int = 1

    def __post_init__(self):
        self.values = tuple(self.values)
        if not self.values:
            raise ValueError("table orders need at least one value")
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("table values must be nondecreasing")
        if self.tail_slope < 1:
            raise ValueError("tail_slope must be at least 1")

    def eval(self, n: int) -> int:
        if n < len(self.values):
            return self.values[n]
        return self.values[-1] + self.tail_slope * (n - len(self.values) + 1)

    def to_json(self) -> dict:
        return {"kind": "table", "values": list(self.values), "tail_slope": self.tail_slope}


def _check_points(points: list[int]) -> None:
    if any(q <= p for p, q in zip(points, points[1:])):
        raise ValueError("points must be strictly increasing")
    if any(p < 0 for p in points):
        raise ValueError("points are naturals")


def _segment(points: list[int], p: int) -> int | None:
    """Least 1-based i with p <= points[i-1], or None if past the list."""
    for i, q in enumerate(points, start=1):  # point lists stay short
        if p <= q:
            return i
    return None


@dataclass
class BreakpointsOrder(ComputableOrder):
    """h(p) = base + (index of the first point >= p).

    The order takes value base+1 up to the first point, base+2 up to the
    second, and so on, so it can never grow faster than base + p + 1.
    """

    base: int
    points: list[int]
    strict: bool = False
    extender: Callable[[int], bool] | None = field(default=None, repr=False)

    def __post_init__(self):
        self.points = list(self.points)
        _check_points(self.points)

    def _ensure_covers(self, p: int) -> bool:
        if self.points and p <= self.points[-1]:
            return True
        if self.extender is None:
            return False
        while not self.points or self.points[-1] < p:
            before = len(self.points)
            if not self.extender(before + 1) or len(self.points) <= before:
                return False
        return True

    def eval(self, p: int) -> int:
        if self._ensure_covers(p):
            seg = _segment(self.points, p)
            assert seg is not None
            return self.base + seg
        if self.strict or self.extender is not None:
            raise BudgetExhausted(
                f"order known only up to {self.points[-1] if self.points else 'nothing'}, "
                f"asked at {p}"
            )
        # slope-one tail: the list itself defines the order
        last = self.points[-1] if self.points else 0
        return self.base + len(self.points) + max(1, p - last)

    def inverse_threshold(self, m: int) -> int:
        if m <= self.base + 1:
            return 0
        need = m - self.base - 1  # first p with h(p) = m lies just past point #need
        if self._ensure_covers_count(need):
            return self.points[need - 1] + 1
        if self.strict or self.extender is not None:
            raise BudgetExhausted(f"order has {len(self.points)} points, threshold needs {need}")
        last = self.points[-1] if self.points else 0
        return last + (need - len(self.points)) + 1

    def _ensure_covers_count(self, count: int) -> bool:
        if len(self.points) >= count:
            return True
        if self.extender is None:
            return False
        while len(self.points) < count:
            before = len(self.points)
            if not self.extender(before + 1) or len(self.points) <= before:
                return False
        return True

    def to_json(self) -> dict:
        return {"kind": "breakpoints", "base": self.base, "points": list(self.points)}


@dataclass
class MinClauseOrder(ComputableOrder):
    """h(p) = least n >= base with p <= p_n, points indexed 1, 2, ...

    Beyond the explicit list the points continue with slope one, which keeps
    the order total without changing any value the list determines.
    """

    base: int
    points: list[int]

    def __post_init__(self):
        self.points = list(self.points)
        _check_points(self.points)

    def eval(self, p: int) -> int:
        seg = _segment(self.points, p)
        if seg is None:
            last = self.points[-1] if self.points else 0
            seg = len(self.points) + max(1, p - last)
        return max(self.base, seg)

    def to_json(self) -> dict:
        return {"kind": "minclause", "base": self.base, "points": list(self.points)}


def order_from_json(data: dict) -> ComputableOrder:
    kind = data.get("kind")
    if kind == "identity":
        return IdentityOrder()
    if kind == "table":
        return TableOrder(values=tuple(data["values"]), tail_slope=data.get("tail_slope", 1))
    if kind == "breakpoints":
        return BreakpointsOrder(base=data["base"], points=list(data["points"]))
    if kind == "minclause":
        return MinClauseOrder(base=data["base"], points=list(data["points"]))
    raise ValueError(f"unknown order kind {kind!r}")


def load_order(text: str) -> ComputableOrder:
    """Accept the shorthand 'identity', inline JSON, or a path to a JSON file."""
    text = text.strip()
    if text == "identity":
        return IdentityOrder()
    if text.startswith("{"):
        return order_from_json(json.loads(text))
    with open(text, "r", encoding="utf-8") as handle:
        return order_from_json(json.load(handle))
