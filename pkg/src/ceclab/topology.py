"""Effective opens and staged semi-decision.

An effective open set is a stream of cylinders (finite words); membership of
a cylinder [u] in the open is certified once some enumerated word is a prefix
of u.  Truncation is explicit everywhere: queries say how many cylinders they
are willing to look at, and a False from word_in_open is only as good as that
truncation.

A staged acceptor semi-decides a property of members from their indices:
accept_by(i, t) is monotone in t and accepting some index of a function means
accepting the function.  oracle_semidecide runs the acceptor against pointwise
oracle access to an unknown function plus an upper bound k on its least
index: every index up to k is progressively rejected (a disagreement with the
oracle) or accepted, and the function is accepted at the first stage where
all of them are classified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .classes import EffectiveClass
from .outcomes import Accept, NoVerdictYet
from .words import Word, canonical_words, word_is_prefix


class EffectiveOpen:
    """A memoized, possibly truncated stream of cylinders."""

    def __init__(self, source: Iterator[Word] | Iterable[Word], label: str = ""):
        self._source = iter(source)
        self._cache: list[Word] = []
        self._done = False
        self.truncated = False  # set by budgeted producers when they stop early
        self.label = label

    @classmethod
    def from_words(cls, cylinders: Iterable[Word], label: str = "") -> "EffectiveOpen":
        return cls(iter(tuple(cylinders)), label=label)

    def take(self, count: int) -> list[Word]:
        """First min(count, available) cylinders."""
        while len(self._cache) < count and not self._done:
            try:
                self._cache.append(next(self._source))
            except StopIteration:
                self._done = True
        return self._cache[:count]

    def cylinder_at(self, position: int) -> Word | None:
        cylinders = self.take(position + 1)
        return cylinders[position] if position < len(cylinders) else None


def word_in_open(u: Word, open_set: EffectiveOpen, truncation: int) -> bool:
    """Certified containment [u] within the open, looking at the first
    `truncation` cylinders only; False is inconclusive at this truncation."""
    return any(word_is_prefix(w, u) for w in open_set.take(truncation))


@dataclass
class StagedAcceptor:
    """Monotone staged acceptance of indices; extensional over the class."""

    accept_by: Callable[[int, int], bool]
    label: str = ""


def cylinder_acceptor(cls: EffectiveClass, cylinders: list[Word]) -> StagedAcceptor:
    """Accept indices of members extending any listed cylinder; at stage t the
    first min(t, len) cylinders are consulted."""
    fixed = [tuple(v) for v in cylinders]

    def accept_by(i: int, t: int) -> bool:
        return any(cls.extends_check(i, v) for v in fixed[: min(t, len(fixed))])

    label = "[" + ", ".join("(" + ",".join(map(str, v)) + ")" for v in fixed) + "]"
    return StagedAcceptor(accept_by=accept_by, label=label)


@dataclass
class ClassifiedRun:
    """Outcome of a staged run over indices 0..k."""

    accepted: dict[int, int] = field(default_factory=dict)  # index -> stage
    rejected: dict[int, int] = field(default_factory=dict)  # index -> witness input
    stage: int | None = None  # stage at which everything was classified


def oracle_semidecide(
    acceptor: StagedAcceptor,
    cls: EffectiveClass,
    oracle: Callable[[int], int],
    k: int,
    stage_budget: int,
) -> tuple[Accept | NoVerdictYet, ClassifiedRun]:
    """Semi-decide acceptor membership of the oracle's function, given that
    its least index in the class is at most k.

    Stage t rejects surviving indices whose function disagrees with the
    oracle at input t and accepts those the acceptor has accepted by t; the
    run concludes positively once every index up to k is classified.
    """
    run = ClassifiedRun()
    alive = list(range(k + 1))
    for t in range(stage_budget):
        still = []
        for i in alive:
            if cls.evaluate(i, t) != oracle(t):
                run.rejected[i] = t
            elif acceptor.accept_by(i, t):
                run.accepted[i] = t
            else:
                still.append(i)
        alive = still
        if not alive:
            run.stage = t
            return Accept(at=t), run
    return NoVerdictYet(detail=f"indices {alive} unclassified after {stage_budget} stages"), run


def certifies_acceptance(
    cls: EffectiveClass, acceptor: StagedAcceptor, k: int, sigma: Word
) -> bool:
    """Whether the staged run with oracle answers read off `sigma`, stages
    limited to |sigma|, classifies every index up to k and accepts at least
    one.

    Such a word certifies every extension: any function extending sigma makes
    the live run classify the same indices by the same stage.  Requiring an
    acceptance keeps vacuous all-rejected words (whose cylinder misses every
    function with least index <= k) out of the enumeration.
    """
    alive = list(range(k + 1))
    accepted_any = False
    for t in range(len(sigma) + 1):
        still = []
        for i in alive:
            if t < len(sigma) and cls.evaluate(i, t) != sigma[t]:
                continue
            if acceptor.accept_by(i, t):
                accepted_any = True
                continue
            still.append(i)
        alive = still
        if not alive:
            return accepted_any
    return False


def certified_words(
    cls: EffectiveClass,
    acceptor: StagedAcceptor,
    k: int,
    scan_budget: int,
) -> Iterator[Word]:
    """Certifying words in canonical order, scanning at most scan_budget
    candidates."""
    for t, sigma in zip(range(scan_budget), canonical_words()):
        if certifies_acceptance(cls, acceptor, k, sigma):
            yield sigma


def build_uniform_opens(
    cls: EffectiveClass,
    acceptor: StagedAcceptor,
    k: int,
    scan_budget: int = 4000,
) -> EffectiveOpen:
    """The level-k open of the acceptor: cylinders whose every extension is
    accepted by the staged run with bound k.

    In the limit the open agrees with the accepted set on functions of
    complexity at most k; the scan budget truncates the enumeration, which
    the returned open records.
    """

    def stream() -> Iterator[Word]:
        yield from certified_words(cls, acceptor, k, scan_budget)
        open_set.truncated = True  # budget, not exhaustion, ended the scan

    open_set = EffectiveOpen(stream(), label=f"U_{k}({acceptor.label})")
    return open_set
