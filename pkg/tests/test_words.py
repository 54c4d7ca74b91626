"""Canonical word enumeration and word utilities."""

import itertools

from hypothesis import given, strategies as st

from ceclab import canonical_words, format_word, parse_word, word_at, word_is_prefix

words = st.lists(st.integers(min_value=0, max_value=9), max_size=6).map(tuple)


def test_enumeration_graded_and_duplicate_free():
    seen = list(itertools.islice(canonical_words(), 3000))
    assert len(set(seen)) == len(seen)
    grades = [(len(w) + sum(w), len(w)) for w in seen]
    assert grades == sorted(grades)


def test_enumeration_is_complete_for_small_weight():
    seen = set(itertools.islice(canonical_words(), 3000))
    # every word of weight <= 6 must be present
    for length in range(7):
        for entries in itertools.product(range(7), repeat=length):
            if length + sum(entries) <= 6:
                assert entries in seen


def test_word_at_matches_stream():
    stream = list(itertools.islice(canonical_words(), 64))
    assert [word_at(t) for t in range(64)] == stream


def test_first_words():
    assert word_at(0) == ()
    assert word_at(1) == (0,)


def test_parse_and_format_empty():
    assert parse_word("") == ()
    assert format_word(()) == ""


@given(words)
def test_parse_format_round_trip(w):
    assert parse_word(format_word(w)) == w


@given(words, words)
def test_prefix_relation(u, w):
    assert word_is_prefix(u, u + w)
    if w and not word_is_prefix(w, u):
        assert not word_is_prefix(u + w, u) or not u


def test_prefix_basics():
    assert word_is_prefix((), (3, 1))
    assert word_is_prefix((3,), (3, 1))
    assert not word_is_prefix((1,), (3, 1))
    assert not word_is_prefix((3, 1, 0), (3, 1))
