"""Restricted complexity relative to a numbering.

The complexity of a finite word v is the least index whose function extends
v; the complexity of a function is the least index computing it.  Since the
value for a word is found by a bounded scan, every query carries an explicit
search bound and a miss is reported as ExceedsBound rather than by diverging.
Scans share a per-class watermark cache so sweeping queries stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classes import EffectiveClass
from .outcomes import ExceedsBound
from .words import Word


def prefix_complexity(cls: EffectiveClass, v: Word, search_bound: int) -> int | ExceedsBound:
    """Least i <= search_bound with f_i in [v], else ExceedsBound(search_bound)."""
    scanned, found = cls._extender_cache.get(v, (-1, None))
    if found is not None and found <= search_bound:
        return found
    if found is None and scanned >= search_bound:
        return ExceedsBound(search_bound)
    j = scanned + 1
    while j <= search_bound:
        if cls.extends_check(j, v):
            cls._extender_cache[v] = (j, j)
            return j
        j += 1
    cls._extender_cache[v] = (search_bound, None)
    return ExceedsBound(search_bound)


def prefix_complexity_at_most(cls: EffectiveClass, v: Word, bound: int) -> bool:
    """Whether some index <= bound extends v; same scan, boolean view."""
    return isinstance(prefix_complexity(cls, v, bound), int)


@dataclass(frozen=True)
class ComplexityProfile:
    index: int
    values: tuple[int, ...]  # values[n] = complexity of the length-n prefix


def complexity_profile(cls: EffectiveClass, i: int, n_max: int) -> ComplexityProfile:
    """Prefix complexities of f_i for n = 0..n_max.

    The scan bound i always suffices because f_i extends its own prefixes,
    so every entry is an exact value.  Entries are nondecreasing in n.
    """
    values = []
    for n in range(n_max + 1):
        value = prefix_complexity(cls, cls.prefix_word(i, n), i)
        assert isinstance(value, int)
        values.append(value)
    return ComplexityProfile(index=i, values=tuple(values))


def class_points(cls: EffectiveClass, k: int, p: int) -> set[Word]:
    """All length-p words of complexity <= k: prefixes of f_0..f_k, deduplicated."""
    return {cls.prefix_word(j, p) for j in range(k + 1)}


@dataclass(frozen=True)
class ClassFunctions:
    indices: tuple[int, ...]
    horizon_limited: bool
    horizon: int | None = None


def class_functions(cls: EffectiveClass, k: int, horizon: int = 64) -> ClassFunctions:
    """Minimal-index representatives of the distinct functions among f_0..f_k.

    Exact when the class has decidable equality; otherwise functions are told
    apart only up to `horizon` and the result says so.
    """
    if cls.decidable_equality and cls.canonical_key is not None:
        seen: set = set()
        reps = []
        for j in range(k + 1):
            key = cls.canonical_key(j)
            if key not in seen:
                seen.add(key)
                reps.append(j)
        return ClassFunctions(indices=tuple(reps), horizon_limited=False)
    seen_prefixes: set[Word] = set()
    reps = []
    for j in range(k + 1):
        prefix = cls.prefix_word(j, horizon)
        if prefix not in seen_prefixes:
            seen_prefixes.add(prefix)
            reps.append(j)
    return ClassFunctions(indices=tuple(reps), horizon_limited=True, horizon=horizon)
