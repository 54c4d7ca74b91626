"""Finite words of natural numbers.

Words are plain tuples of non-negative ints.  Besides prefix tests this module
provides the canonical enumeration of all finite words used by the open-set
machinery: words are graded by weight = length + sum of entries, then ordered
by length and lexicographically.  Every word appears exactly once and words
with small entries appear early, which keeps downstream searches tractable.
"""

from __future__ import annotations

from typing import Iterator

Word = tuple[int, ...]


def is_word(value: object) -> bool:
    return isinstance(value, tuple) and all(isinstance(x, int) and x >= 0 for x in value)


def word_is_prefix(w: Word, u: Word) -> bool:
    """True iff `w` is a (not necessarily proper) prefix of `u`."""
    return len(w) <= len(u) and u[: len(w)] == w


def _compositions(total: int, parts: int) -> Iterator[Word]:
    # all `parts`-tuples of naturals summing to `total`, lexicographically
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def canonical_words() -> Iterator[Word]:
    """Enumerate every finite word exactly once: by weight, length, then lex."""
    weight = 0
    while True:
        for length in range(weight + 1):
            yield from _compositions(weight - length, length)
        weight += 1


_word_cache: list[Word] = []
_word_source = canonical_words()


def word_at(t: int) -> Word:
    """The t-th word of the canonical enumeration (memoized)."""
    while len(_word_cache) <= t:
        _word_cache.append(next(_word_source))
    return _word_cache[t]


def parse_word(text: str) -> Word:
    """Parse a comma-separated word; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return ()
    entries = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk.isdigit():
            raise ValueError(f"word entries must be naturals, got {chunk!r}")
        entries.append(int(chunk))
    return tuple(entries)


def format_word(w: Word) -> str:
    return ",".join(str(x) for x in w)
