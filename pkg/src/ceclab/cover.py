"""Cover synthesis: semi-decidable properties as unions of trimmed cylinders.

A property of class members given by a staged acceptor is turned into a
countable union of components ([v] intersected with an anticomplex set),
such that a member belongs to the property iff some component admits it.
The pieces:

  * uniform opens     level-k certified words of the acceptor (topology module)
  * monotonize        merge levels so each open contains all later ones
  * breakpoints       for a certified cylinder [v] at level k+1, a growing
                      sequence p_1 < p_2 < ... maintaining the invariant
                      that every function extending v whose length-p_m
                      prefixes are (k+m)-cheap for m <= i lies in the level
                      k+i+1 open
  * components        [v] plus the order h(p) = k + least i with p <= p_i;
                      the invariant makes every admitted member a genuine
                      property member, while members of complexity <= k+1
                      are admitted outright
  * replay            semi-decide membership of f_i by scanning components

Everything is budgeted and budget exhaustion surfaces as an inconclusive
outcome, never as a wrong verdict.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, replace
from typing import Iterable, Iterator

from .classes import EffectiveClass
from .anticomplex import decide_anticomplex
from .complexity import prefix_complexity_at_most
from .orders import BreakpointsOrder
from .outcomes import Accept, BudgetExhausted, NoVerdictYet
from .topology import EffectiveOpen, StagedAcceptor, build_uniform_opens, word_in_open
from .words import Word


@dataclass(frozen=True)
class CoverBudgets:
    """Resource bounds for the synthesis pipeline."""

    kmax: int | None = 4  # highest component base; None leaves it to max_components
    open_scan: int = 1500  # candidate words examined per open level
    cert_take: int = 48  # cylinders consulted per certification search
    max_points: int = 64  # breakpoints synthesized per component
    max_components: int = 256
    level_cap: int = 24  # deepest open level the family will materialize

    def doubled(self) -> "CoverBudgets":
        return replace(
            self,
            kmax=None if self.kmax is None else 2 * self.kmax,
            open_scan=2 * self.open_scan,
            cert_take=2 * self.cert_take,
            max_points=2 * self.max_points,
            max_components=2 * self.max_components,
            level_cap=2 * self.level_cap,
        )


class UniformOpenFamily:
    """Level-indexed opens of one acceptor, raw or monotonized.

    Raw level k is the certified-word enumeration with bound k.  Monotonized,
    level k merges every raw level >= k diagonally (deduplicated), so the
    family is nonincreasing in k as sets of cylinders, up to truncation.
    """

    def __init__(
        self,
        cls: EffectiveClass,
        acceptor: StagedAcceptor,
        budgets: CoverBudgets,
        monotone: bool = True,
    ):
        self.cls = cls
        self.acceptor = acceptor
        self.budgets = budgets
        self.monotone = monotone
        self._raw: dict[int, EffectiveOpen] = {}
        self._merged: dict[int, EffectiveOpen] = {}
        self._cert_lengths: dict[tuple[int, int], int | None] = {}

    def raw_open(self, level: int) -> EffectiveOpen:
        if level not in self._raw:
            self._raw[level] = build_uniform_opens(
                self.cls, self.acceptor, level, self.budgets.open_scan
            )
        return self._raw[level]

    def open(self, level: int) -> EffectiveOpen:
        if not self.monotone:
            return self.raw_open(level)
        if level not in self._merged:
            self._merged[level] = EffectiveOpen(
                self._merge_stream(level), label=f"mono-U_{level}"
            )
        return self._merged[level]

    def _merge_stream(self, level: int) -> Iterator[Word]:
        seen: set[Word] = set()
        cap = self.budgets.level_cap
        for d in itertools.count():
            exhausted = True
            for offset in range(d + 1):
                j = level + offset
                if j > cap:
                    break
                raw = self.raw_open(j)
                w = raw.cylinder_at(d - offset)
                if w is None:
                    continue
                exhausted = False
                if w not in seen:
                    seen.add(w)
                    yield w
            # stop only once every raw level up to the cap has been probed and
            # all of them are finalized shorter than the positions probed
            if (
                exhausted
                and level + d >= cap
                and all(
                    self.raw_open(j).cylinder_at(d - (j - level)) is None
                    for j in range(level, cap + 1)
                )
            ):
                return

    def certified_prefix_length(self, level: int, j: int) -> int | None:
        """Shortest enumerated cylinder of the level open that is a prefix of
        f_j, scanning cert_take cylinders; None if none is found there."""
        key = (level, j)
        if key not in self._cert_lengths:
            best: int | None = None
            for w in self.open(level).take(self.budgets.cert_take):
                if (best is None or len(w) < best) and self.cls.extends_check(j, w):
                    best = len(w)
            self._cert_lengths[key] = best
        return self._cert_lengths[key]


def open_family(
    cls: EffectiveClass,
    acceptor: StagedAcceptor,
    budgets: CoverBudgets | None = None,
    monotone: bool = True,
) -> UniformOpenFamily:
    return UniformOpenFamily(cls, acceptor, budgets or CoverBudgets(), monotone=monotone)


def monotonize(family: UniformOpenFamily) -> UniformOpenFamily:
    """Monotone view of the family; idempotent, raw scans are shared."""
    if family.monotone:
        return family
    mono = UniformOpenFamily(family.cls, family.acceptor, family.budgets, monotone=True)
    mono._raw = family._raw
    return mono


def _next_breakpoint(
    cls: EffectiveClass,
    family: UniformOpenFamily,
    k: int,
    v: Word,
    points: list[int],
) -> int:
    """One synthesis step; returns p_{i+1} for i = len(points).

    Candidates are the indices up to k+i+1 whose function extends v and whose
    length-p_m prefix is (k+m)-cheap for each existing point.  Each candidate
    names a function provably inside the level-(k+i+1) open, hence inside the
    property, hence certified somewhere in the level-(k+i+2) open; the new
    point dominates all those certified prefix lengths.
    """
    i = len(points)
    level = k + i + 2
    if level > family.budgets.level_cap:
        raise BudgetExhausted(f"level cap {family.budgets.level_cap} reached at level {level}")
    candidates = set()
    for j in range(k + i + 2):
        if not cls.extends_check(j, v):
            continue
        if all(
            prefix_complexity_at_most(cls, cls.prefix_word(j, p_m), k + m)
            for m, p_m in enumerate(points, start=1)
        ):
            candidates.add(cls.min_equal_index(j))
    floor = (points[-1] + 1) if points else max(len(v), 1)
    p_next = floor
    for j in sorted(candidates):
        q = family.certified_prefix_length(level, j)
        if q is None:
            raise BudgetExhausted(
                f"index {j} extends {v} but no certified prefix shows up in the "
                f"level-{level} open within {family.budgets.cert_take} cylinders"
            )
        p_next = max(p_next, q)
    return p_next


def synthesize_breakpoints(
    cls: EffectiveClass,
    family: UniformOpenFamily,
    k: int,
    v: Word,
    i_max: int,
    pre_truncation: int = 256,
) -> list[int]:
    """Breakpoints p_1 < ... < p_{i_max} for a cylinder certified at level k+1."""
    if not word_in_open(v, family.open(k + 1), pre_truncation):
        raise ValueError(f"cylinder {v} is not certified in the level-{k + 1} open")
    points: list[int] = []
    for _ in range(i_max):
        points.append(_next_breakpoint(cls, family, k, v, points))
    return points


def breakpoint_invariant_violations(
    cls: EffectiveClass,
    family: UniformOpenFamily,
    k: int,
    v: Word,
    points: list[int],
    upto: int | None = None,
    scan: int | None = None,
) -> list[tuple[int, Word]]:
    """Exhaustive finite check of the synthesis invariant.

    For each step m, every length-p_m word of complexity at most k+m that
    extends v and whose earlier cut-offs are likewise cheap must sit inside
    the level-(k+m+1) open.  Words of bounded complexity at a fixed length
    are exactly the class_points set, so the check is a finite enumeration.
    Returns the offending (step, word) pairs, empty when the invariant holds.
    """
    from .complexity import class_points
    from .words import word_is_prefix

    upto = len(points) if upto is None else upto
    scan = family.budgets.open_scan if scan is None else scan
    earlier: list[set[Word]] = [
        class_points(cls, k + j, points[j - 1]) for j in range(1, upto + 1)
    ]
    bad: list[tuple[int, Word]] = []
    for m in range(1, upto + 1):
        p_m = points[m - 1]
        for w in sorted(class_points(cls, k + m, p_m)):
            if not word_is_prefix(v, w):
                continue
            if any(w[: points[j - 1]] not in earlier[j - 1] for j in range(1, m)):
                continue
            if not word_in_open(w, family.open(k + m + 1), scan):
                bad.append((m, w))
    return bad


class CoverComponent:
    """One piece of the cover: [v] trimmed by a lazily synthesized order."""

    def __init__(self, cls: EffectiveClass, family: UniformOpenFamily, k: int, v: Word):
        self.cls = cls
        self.family = family
        self.k = k
        self.v = v
        self.exhausted: str | None = None
        self.order = BreakpointsOrder(base=k, points=[], extender=self._extend_to)
        # the order's list is the single copy; the synthesizer appends to it
        self.points = self.order.points

    def _extend_to(self, count: int) -> bool:
        while len(self.points) < count:
            if self.exhausted is not None:
                return False
            if len(self.points) >= self.family.budgets.max_points:
                self.exhausted = f"breakpoint budget {self.family.budgets.max_points}"
                return False
            try:
                self.points.append(
                    _next_breakpoint(self.cls, self.family, self.k, self.v, self.points)
                )
            except BudgetExhausted as err:
                self.exhausted = str(err)
                return False
        return True

    def ensure_points(self, count: int) -> bool:
        return self._extend_to(count)

    def describe(self) -> dict:
        return {"k": self.k, "v": list(self.v), "breakpoints": list(self.points)}


def enumerate_cover(
    cls: EffectiveClass,
    acceptor: StagedAcceptor,
    budgets: CoverBudgets | None = None,
) -> Iterator[CoverComponent]:
    """Components in a fixed diagonal order over (base k, cylinder position).

    The stream is deterministic; it ends when the component budget is spent
    or every open in range is exhausted at every probed position.
    """
    budgets = budgets or CoverBudgets()
    family = open_family(cls, acceptor, budgets, monotone=True)
    emitted = 0
    sizes: dict[int, int | None] = {}
    for d in itertools.count():
        top = d if budgets.kmax is None else min(d, budgets.kmax)
        produced = False
        for k in range(top + 1):
            position = d - k
            size = sizes.get(k)
            if size is not None and position >= size:
                continue
            w = family.open(k + 1).cylinder_at(position)
            if w is None:
                sizes[k] = min(position, size) if size is not None else position
                continue
            produced = True
            yield CoverComponent(cls, family, k, w)
            emitted += 1
            if emitted >= budgets.max_components:
                return
        if not produced and budgets.kmax is not None and d > budgets.kmax:
            if all(sizes.get(k) is not None for k in range(budgets.kmax + 1)) and d >= (
                budgets.kmax + max(size or 0 for size in sizes.values())
            ):
                return


def semidecide_from_cover(
    cls: EffectiveClass,
    components: Iterable,
    i: int,
    probe_budget: int | None = None,
    cover_truncated: bool = False,
) -> Accept | NoVerdictYet:
    """Scan components until one admits f_i: the component's cylinder must be
    a prefix of the function and the anticomplexity test must pass.

    Accepting is sound whenever the components came out of the synthesis;
    silence within the budget is inconclusive, and `budget_hit` records
    whether the search was cut short: a probe that ran out of synthesis
    budget, the probe budget itself, or (with `cover_truncated`) the fact
    that the component stream is a finite truncation of the full cover.
    """
    budget_hit = False
    detail = ""
    for n, comp in enumerate(components):
        if probe_budget is not None and n >= probe_budget:
            budget_hit = True
            detail = f"probe budget {probe_budget} reached"
            break
        if not cls.extends_check(i, comp.v):
            continue
        try:
            if decide_anticomplex(cls, i, comp.order):
                return Accept(at=n)
        except BudgetExhausted as err:
            budget_hit = True
            detail = str(err)
    if cover_truncated and not budget_hit:
        budget_hit = True
        detail = "cover stream is a finite truncation"
    return NoVerdictYet(budget_hit=budget_hit, detail=detail)


@dataclass
class CoverReport:
    index_bound: int
    agreements: list[int]
    disagreements: list[int]
    inconclusive: list[int]
    budget_flagged: list[int]  # inconclusive entries whose miss hit a budget
    accepted: dict[int, int]  # index -> accepting component position

    def as_dict(self) -> dict:
        return {
            "index_bound": self.index_bound,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "inconclusive": self.inconclusive,
            "budget_flagged": self.budget_flagged,
            "accepted": {str(i): n for i, n in sorted(self.accepted.items())},
        }


def verify_cover_truncation(
    cls: EffectiveClass,
    fixture_cylinders: list[Word],
    components: list,
    index_bound: int,
    probe_budget: int | None = None,
    cover_truncated: bool = True,
) -> CoverReport:
    """Compare cover replay against ground truth for every index up to the
    bound.

    A member the truncated cover fails to admit is inconclusive (more budget
    or a deeper truncation might admit it); a non-member the cover admits
    would be a disagreement and the synthesis guarantees there are none.
    """
    fixture = [tuple(v) for v in fixture_cylinders]
    report = CoverReport(
        index_bound=index_bound,
        agreements=[],
        disagreements=[],
        inconclusive=[],
        budget_flagged=[],
        accepted={},
    )
    for i in range(index_bound + 1):
        truth = any(cls.extends_check(i, v) for v in fixture)
        verdict = semidecide_from_cover(
            cls, components, i, probe_budget, cover_truncated=cover_truncated
        )
        if isinstance(verdict, Accept):
            report.accepted[i] = verdict.at
            (report.agreements if truth else report.disagreements).append(i)
        elif truth:
            report.inconclusive.append(i)
            if verdict.budget_hit:
                report.budget_flagged.append(i)
        else:
            report.agreements.append(i)
    return report


@dataclass(frozen=True)
class MaterializedComponent:
    """A component reloaded from disk: breakpoints end at a known horizon and
    queries past it are inconclusive rather than guessed."""

    k: int
    v: Word
    order: BreakpointsOrder
    horizon: int


def cover_to_json(cls: EffectiveClass, components: list[CoverComponent]) -> dict:
    return {
        "class": cls.class_id,
        "components": [
            {
                "k": comp.k,
                "v": list(comp.v),
                "breakpoints": list(comp.points),
                "horizon": comp.points[-1] if comp.points else 0,
            }
            for comp in components
        ],
    }


def cover_from_json(data: dict) -> tuple[str, list[MaterializedComponent]]:
    components = []
    for entry in data["components"]:
        points = list(entry["breakpoints"])
        components.append(
            MaterializedComponent(
                k=entry["k"],
                v=tuple(entry["v"]),
                order=BreakpointsOrder(base=entry["k"], points=points, strict=True),
                horizon=entry.get("horizon", points[-1] if points else 0),
            )
        )
    return data["class"], components


def dump_cover(cls: EffectiveClass, components: list[CoverComponent]) -> str:
    return json.dumps(cover_to_json(cls, components), indent=2, sort_keys=True)
