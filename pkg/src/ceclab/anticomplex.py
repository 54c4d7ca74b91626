"""Anticomplex sets and their decision procedures.

For a computable order h, the anticomplex set of a class consists of the
members all of whose prefixes are cheap: the complexity of the length-n
prefix is at most h(n) for every n.  Membership of f_i is decidable because
any index bounds the complexity of every prefix of its function, so only the
finitely many n where h(n) falls below that bound need checking.

For dense classes these sets are topologically thin.  escape_index pushes any
cylinder outside the set in one step, and trapping_order manufactures, for a
given member, an order whose anticomplex set contains it while every
neighbourhood still escapes: the non_interior_witness exhibits the escaping
extension explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import EffectiveClass
from .complexity import prefix_complexity, prefix_complexity_at_most
from .orders import ComputableOrder, MinClauseOrder
from .outcomes import ExceedsBound, NotCapable, SearchExhausted, WitnessNotFound
from .words import Word

# fallback scan width for classes that declare density without a witness hook
_GENERIC_SEARCH_CAP = 20_000


@dataclass
class DecideStats:
    """Instrumentation for decide_anticomplex: which prefix lengths were checked."""

    checked: list[int] = field(default_factory=list)
    threshold: int | None = None
    bound_used: int | None = None


def decide_anticomplex(
    cls: EffectiveClass,
    i: int,
    order: ComputableOrder,
    stats: DecideStats | None = None,
) -> bool:
    """Exact membership of f_i in the anticomplex set of `order`.

    Uses the least index of f_i as the complexity bound when equality is
    decidable (any upper bound works; the least one minimizes the finite
    check range).  Prefix checks happen only below the threshold where the
    order reaches that bound; beyond it the defining inequality is automatic.

    The walk is interleaved: h is evaluated one length at a time and the
    scan stops at the first failing prefix.  For orders that synthesize
    their breakpoints on demand this keeps hopeless indices cheap, since
    their first expensive prefix is rejected before any deep extension.
    """
    bound = cls.min_equal_index(i)
    if stats is not None:
        stats.bound_used = bound
    n = 0
    while True:
        h_n = order.eval(n)
        if h_n >= bound:
            if stats is not None:
                stats.threshold = n
            return True
        if stats is not None:
            stats.checked.append(n)
        if not prefix_complexity_at_most(cls, cls.prefix_word(i, n), h_n):
            return False
        n += 1


def brute_force_anticomplex(
    cls: EffectiveClass, i: int, order: ComputableOrder, n_max: int
) -> bool:
    """Reference decision: check every prefix length up to n_max directly."""
    return all(
        prefix_complexity_at_most(cls, cls.prefix_word(i, n), order.eval(n))
        for n in range(n_max + 1)
    )


def escape_index(cls: EffectiveClass, u: Word, order: ComputableOrder) -> int:
    """Least value a such that extending u by a leaves the anticomplex set.

    Only indices up to h(|u|+1) can certify a cheap length-(|u|+1) prefix, so
    any value they do not take at position |u| works; density guarantees the
    extended cylinder still meets the class.
    """
    if not cls.dense:
        raise NotCapable(f"class {cls.class_id!r} is not declared dense")
    bound = order.eval(len(u) + 1)
    taken = {
        cls.evaluate(j, len(u))
        for j in range(bound + 1)
        if cls.extends_check(j, u)
    }
    a = 0
    while a in taken:
        a += 1
    return a


@dataclass
class TrappingOrder:
    order: MinClauseOrder
    points: tuple[int, ...]  # separation lengths p_1 < ... < p_depth
    index: int
    depth: int


def _distinct_extenders(cls: EffectiveClass, prefix: Word, count: int) -> list[int]:
    """Indices of `count` pairwise distinct members extending `prefix`."""
    if cls.cylinder_witness is not None:
        # density made effective: branch on the next entry
        return [cls.cylinder_witness(prefix + (c,)) for c in range(count)]
    found: list[int] = []
    keys: set = set()
    for j in range(_GENERIC_SEARCH_CAP):
        if not cls.extends_check(j, prefix):
            continue
        key = cls.canonical_key(j) if cls.canonical_key is not None else None
        if key in keys:
            continue
        keys.add(key)
        found.append(j)
        if len(found) == count:
            return found
    raise SearchExhausted(
        f"{count} distinct extensions of {prefix} not found among indices < {_GENERIC_SEARCH_CAP}"
    )


def trapping_order(cls: EffectiveClass, i: int, depth: int) -> TrappingOrder:
    """An order trapping f_i: f_i is anticomplex for it, yet no cylinder
    around f_i stays inside the set.

    For each n = 1..depth, n+2 pairwise distinct members extending the
    length-n prefix of f_i are found together with a separation length p_n at
    which their prefixes are pairwise distinct; the p_n increase strictly.
    The order is h(p) = least n >= i with p <= p_n, which keeps f_i inside
    (h never falls below i, an upper bound for all its prefix complexities)
    while h(p_n) = n for n >= i, low enough for witnesses to beat.
    """
    if not (cls.dense and cls.decidable_equality):
        raise NotCapable("trapping requires a dense class with decidable equality")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    points: list[int] = []
    prev = 0
    for n in range(1, depth + 1):
        prefix = cls.prefix_word(i, n)
        members = _distinct_extenders(cls, prefix, n + 2)
        p = prev + 1
        while True:
            prefixes = {cls.prefix_word(j, p) for j in members}
            if len(prefixes) == len(members):
                break
            p += 1
        points.append(p)
        prev = p
    return TrappingOrder(
        order=MinClauseOrder(base=i, points=points),
        points=tuple(points),
        index=i,
        depth=depth,
    )


def non_interior_witness(
    cls: EffectiveClass,
    trap: TrappingOrder,
    n: int,
) -> Word:
    """A word u of length p_n extending the length-n prefix of the trapped
    function, meeting the class, with complexity above h(|u|) = n.

    Exists for max(base, 1) <= n <= depth: the n+2 candidate prefixes are
    pairwise distinct and at most n+1 of them can be prefixes of f_0..f_n.
    """
    if not max(trap.index, 1) <= n <= trap.depth:
        raise ValueError(f"n must lie in [{max(trap.index, 1)}, {trap.depth}]")
    p_n = trap.points[n - 1]
    prefix = cls.prefix_word(trap.index, n)
    for j in _distinct_extenders(cls, prefix, n + 2):
        u = cls.prefix_word(j, p_n)
        if isinstance(prefix_complexity(cls, u, n), ExceedsBound):
            return u
    raise WitnessNotFound(
        f"all candidate length-{p_n} extensions of {prefix} have complexity <= {n}"
    )
