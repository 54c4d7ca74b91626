"""Independent reference implementations used as test oracles.

Everything here is written from the definitions, without touching package
internals, so agreement with the library is meaningful evidence.
"""

from __future__ import annotations

import math
from functools import lru_cache


def cantor_pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def cantor_unpair(m: int) -> tuple[int, int]:
    w = (math.isqrt(8 * m + 1) - 1) // 2
    b = m - w * (w + 1) // 2
    return w - b, b


@lru_cache(maxsize=None)
def decode_word(code: int) -> tuple[int, ...]:
    if code == 0:
        return ()
    a, rest = cantor_unpair(code - 1)
    return (a,) + decode_word(rest)


def word_value(word: tuple[int, ...], n: int) -> int:
    """The eventually constant function of a word: follow it, then repeat the
    last entry; the empty word is constant zero."""
    if not word:
        return 0
    return word[n] if n < len(word) else word[-1]


def ec_value(index: int, n: int) -> int:
    return word_value(decode_word(index), n)


def ec_prefix(index: int, n: int) -> tuple[int, ...]:
    return tuple(ec_value(index, m) for m in range(n))


def minimal_extender(word: tuple[int, ...], search_bound: int) -> int | None:
    """Least index whose function extends the word, or None past the bound."""
    for j in range(search_bound + 1):
        if all(ec_value(j, m) == word[m] for m in range(len(word))):
            return j
    return None


def normal_form(word: tuple[int, ...]) -> tuple[int, ...]:
    w = list(word)
    while len(w) >= 2 and w[-1] == w[-2]:
        w.pop()
    if w == [0]:
        return ()
    return tuple(w)


def minimal_equal_index(index: int) -> int:
    """Least index of the same function, by scanning normal forms."""
    target = normal_form(decode_word(index))
    j = 0
    while True:
        if normal_form(decode_word(j)) == target:
            return j
        j += 1
