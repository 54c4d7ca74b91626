"""Effective classes of total functions on the naturals.

A class is presented by a numbering: a total evaluator (i, n) -> f_i(n).
Everything downstream (complexity, anticomplex sets, covers) only queries the
numbering pointwise, so the two capability flags carry the extra structure an
operation may need: `decidable_equality` means indices can be compared
exactly, `dense` means every cylinder contains a member.  `cylinder_witness`,
when present, makes density effective by naming a member inside a cylinder.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable

from .outcomes import DifferAt, Equal, UnknownBeyondHorizon
from .words import Word

# scanning for a first disagreement between provably distinct functions must
# terminate; blowing this cap means the canonical keys lied
_DIFFER_SCAN_CAP = 10**7


@dataclass
class EffectiveClass:
    class_id: str
    evaluator: Callable[[int, int], int]
    decidable_equality: bool = False
    dense: bool = False
    eval_budget: int | None = None
    canonical_key: Callable[[int], Hashable] | None = None
    cylinder_witness: Callable[[Word], int] | None = None

    # per-instance memo tables; the numbering is pure so entries never expire
    _prefixes: dict[int, list[int]] = field(default_factory=dict, repr=False)
    _extender_cache: dict[Word, tuple[int, int | None]] = field(
        default_factory=dict, repr=False
    )
    _min_index: dict[int, int] = field(default_factory=dict, repr=False)

    def evaluate(self, i: int, n: int) -> int:
        if i < 0 or n < 0:
            raise ValueError("indices and inputs are naturals")
        values = self._prefixes.setdefault(i, [])
        while len(values) <= n:
            values.append(self.evaluator(i, len(values)))
        return values[n]

    def prefix_word(self, i: int, n: int) -> Word:
        """The length-n prefix f_i(0), ..., f_i(n-1)."""
        if n == 0:
            return ()
        self.evaluate(i, n - 1)
        return tuple(self._prefixes[i][:n])

    def extends_check(self, i: int, v: Word) -> bool:
        """True iff f_i lies in the cylinder [v]."""
        return all(self.evaluate(i, n) == x for n, x in enumerate(v))

    def equal_functions(
        self, i: int, j: int, horizon: int = 64
    ) -> Equal | DifferAt | UnknownBeyondHorizon:
        """Compare f_i and f_j.

        With decidable equality the answer is exact and the horizon is
        ignored; otherwise prefixes are compared up to `horizon` and a tie is
        reported as unknown rather than equal.
        """
        if self.decidable_equality and self.canonical_key is not None:
            if self.canonical_key(i) == self.canonical_key(j):
                return Equal()
            n = 0
            while self.evaluate(i, n) == self.evaluate(j, n):
                n += 1
                if n > _DIFFER_SCAN_CAP:  # pragma: no cover
                    raise AssertionError("canonical keys differ but functions agree")
            return DifferAt(n)
        for n in range(horizon):
            if self.evaluate(i, n) != self.evaluate(j, n):
                return DifferAt(n)
        return UnknownBeyondHorizon(horizon)

    def min_equal_index(self, i: int) -> int:
        """Least index of the same function; requires decidable equality."""
        if not (self.decidable_equality and self.canonical_key is not None):
            return i
        cached = self._min_index.get(i)
        if cached is not None:
            return cached
        key = self.canonical_key(i)
        least = i
        for j in range(i):
            if self.canonical_key(j) == key:
                least = j
                break
        self._min_index[i] = least
        return least
