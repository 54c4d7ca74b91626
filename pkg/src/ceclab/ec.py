"""Eventually constant functions, numbered through a word code.

The index i decodes to a finite word w.  The empty word denotes the constant
zero function; otherwise f_i follows w and then repeats w's last entry
forever.  The code is a bijection built from the Cantor pairing function, so
every function of this shape occurs, equality of indices is decidable by
comparing reduced words, and every cylinder [u] contains the member with word
u.  No fuel is needed: evaluation cost is the length of the decoded word.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .classes import EffectiveClass
from .words import Word


def pair(a: int, b: int) -> int:
    """Cantor pairing (a + b)(a + b + 1)/2 + b, a bijection N x N -> N."""
    s = a + b
    return s * (s + 1) // 2 + b


def unpair(c: int) -> tuple[int, int]:
    s = (isqrt(8 * c + 1) - 1) // 2
    b = c - s * (s + 1) // 2
    return s - b, b


def ec_encode(w: Word) -> int:
    """Word code: code(empty) = 0, code(a . w) = 1 + pair(a, code(w))."""
    c = 0
    for a in reversed(w):
        c = 1 + pair(a, c)
    return c


@lru_cache(maxsize=None)
def ec_decode(i: int) -> Word:
    if i < 0:
        raise ValueError("indices are naturals")
    out = []
    while i > 0:
        a, i = unpair(i - 1)
        out.append(a)
    return tuple(out)


def reduce_word(w: Word) -> Word:
    """Canonical word of the function: repeated trailing entries dropped,
    with the empty word normalized to (0) so it compares equal to f_1."""
    entries = list(w)
    while len(entries) >= 2 and entries[-1] == entries[-2]:
        entries.pop()
    if not entries:
        entries = [0]
    return tuple(entries)


def _ec_evaluate(i: int, n: int) -> int:
    w = ec_decode(i)
    if not w:
        return 0
    return w[n] if n < len(w) else w[-1]


def _ec_key(i: int) -> Word:
    return reduce_word(ec_decode(i))


def _ec_witness(u: Word) -> int:
    # the member with word u starts with u; for the empty cylinder any
    # member works and 0 is the least index
    return ec_encode(u) if u else 0


@lru_cache(maxsize=None)
def make_ec() -> EffectiveClass:
    return EffectiveClass(
        class_id="ec",
        evaluator=_ec_evaluate,
        decidable_equality=True,
        dense=True,
        canonical_key=_ec_key,
        cylinder_witness=_ec_witness,
    )
