"""Joint evaluation, prefixes, extension checks, equality outcomes."""

import pytest
from hypothesis import given, settings, strategies as st

from ceclab import DifferAt, Equal, UnknownBeyondHorizon


@given(st.integers(min_value=0, max_value=400), st.integers(min_value=0, max_value=25))
def test_prefix_word_matches_pointwise_evaluation(ec, i, n):
    assert ec.prefix_word(i, n) == tuple(ec.evaluate(i, m) for m in range(n))


@given(st.integers(min_value=0, max_value=300), st.integers(min_value=0, max_value=12))
def test_extends_check_of_own_prefix(ec, i, n):
    assert ec.extends_check(i, ec.prefix_word(i, n))


def test_extends_check_rejects_mismatch(ec):
    assert not ec.extends_check(0, (1,))
    assert ec.extends_check(2, (1, 1, 1))
    assert not ec.extends_check(2, (1, 0))


def test_equality_outcomes_on_ec(ec):
    assert isinstance(ec.equal_functions(0, 1), Equal)
    assert isinstance(ec.equal_functions(0, 3), Equal)
    out = ec.equal_functions(0, 2)
    assert isinstance(out, DifferAt) and out.position == 0
    out = ec.equal_functions(2, 5)  # constant one vs (1,0,...)
    assert isinstance(out, DifferAt) and out.position == 1


def test_equality_is_symmetric_sample(ec):
    for i in range(30):
        for j in range(30):
            a, b = ec.equal_functions(i, j), ec.equal_functions(j, i)
            assert isinstance(a, Equal) == isinstance(b, Equal)


def test_pr_equality_is_horizon_bounded(prc):
    # C(Z; Z) computes the same constant as Z but equality is not decided
    out = prc.equal_functions(0, 3, horizon=16)
    assert isinstance(out, UnknownBeyondHorizon)
    assert out.horizon == 16


def test_pr_detects_difference_within_horizon(prc):
    out = prc.equal_functions(0, 1, horizon=16)  # Z vs S
    assert isinstance(out, DifferAt)
    assert out.position == 0


def test_min_equal_index_without_equality_is_identity(prc):
    assert prc.min_equal_index(7) == 7


@settings(max_examples=30)
@given(st.integers(min_value=0, max_value=150))
def test_min_equal_index_is_a_fixpoint(ec, i):
    rep = ec.min_equal_index(i)
    assert rep <= i
    assert ec.min_equal_index(rep) == rep
    assert isinstance(ec.equal_functions(rep, i), Equal)


def test_prefix_memoization_is_consistent(ec):
    long = ec.prefix_word(17, 30)
    short = ec.prefix_word(17, 5)
    assert long[:5] == short
