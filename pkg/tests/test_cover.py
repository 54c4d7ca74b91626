"""Cover synthesis, replay, truncation verification, serialization."""

import json

import pytest

from ceclab import (
    Accept,
    CoverBudgets,
    NoVerdictYet,
    breakpoint_invariant_violations,
    cover_from_json,
    cover_to_json,
    cylinder_acceptor,
    decide_anticomplex,
    enumerate_cover,
    monotonize,
    open_family,
    semidecide_from_cover,
    synthesize_breakpoints,
    verify_cover_truncation,
    word_in_open,
)

SMALL = CoverBudgets(kmax=4, open_scan=1000, cert_take=64, max_points=10, max_components=48, level_cap=20)


def _cover(ec, cylinders, budgets=SMALL):
    acceptor = cylinder_acceptor(ec, list(cylinders))
    return list(enumerate_cover(ec, acceptor, budgets))


def test_monotonize_pulls_deeper_levels_forward(ec):
    # the [(1)] acceptor certifies nothing below bound 2, so the raw level-0
    # open is empty and the cylinder (1) must come from level 2
    acceptor = cylinder_acceptor(ec, [(1,)])
    raw = open_family(ec, acceptor, CoverBudgets(open_scan=600, level_cap=8), monotone=False)
    assert raw.open(0).take(2) == []
    assert not word_in_open((1,), raw.open(0), 50)
    mono = monotonize(raw)
    assert word_in_open((1,), mono.open(0), 200)


def test_monotonize_is_idempotent(ec):
    acceptor = cylinder_acceptor(ec, [(1,)])
    fam = open_family(ec, acceptor, CoverBudgets(open_scan=600, level_cap=8))
    assert monotonize(fam) is fam


def test_monotonize_preserves_membership_at_some_truncation(ec):
    acceptor = cylinder_acceptor(ec, [(1,)])
    raw = open_family(ec, acceptor, CoverBudgets(open_scan=700, level_cap=10), monotone=False)
    mono = monotonize(raw)
    for level in (2, 3):
        for w in raw.open(level).take(10):
            assert word_in_open(w, mono.open(level), 700)


def test_synthesized_breakpoints_increase_and_hold_the_invariant(ec):
    acceptor = cylinder_acceptor(ec, [(1,)])
    fam = open_family(ec, acceptor, CoverBudgets(open_scan=1000, cert_take=64, level_cap=20))
    points = synthesize_breakpoints(ec, fam, 1, (1,), 3)
    assert len(points) == 3
    assert all(a < b for a, b in zip(points, points[1:]))
    assert breakpoint_invariant_violations(ec, fam, 1, (1,), points) == []


def test_synthesize_rejects_uncertified_cylinder(ec):
    acceptor = cylinder_acceptor(ec, [(1,)])
    fam = open_family(ec, acceptor, CoverBudgets(open_scan=600, level_cap=12))
    with pytest.raises(ValueError):
        synthesize_breakpoints(ec, fam, 1, (0,), 2)


def test_first_component_admits_every_cheap_member(ec):
    comps = _cover(ec, [()])
    first = comps[0]
    for j in range(first.k + 2):
        if ec.extends_check(j, first.v):
            assert decide_anticomplex(ec, j, first.order)


def test_component_orders_start_at_base_plus_one(ec):
    for comp in _cover(ec, [(1,)])[:6]:
        assert comp.ensure_points(4)
        values = [comp.order.eval(p) for p in range(comp.points[-1] + 1)]
        assert values[0] == comp.k + 1
        assert all(a <= b for a, b in zip(values, values[1:]))


def test_replay_accepts_member_and_misses_nonmember(ec):
    comps = _cover(ec, [(1,)])
    assert isinstance(semidecide_from_cover(ec, comps, 2), Accept)
    for budget in (5, 20, len(comps)):
        verdict = semidecide_from_cover(ec, comps, 0, probe_budget=budget)
        assert isinstance(verdict, NoVerdictYet)


def test_empty_acceptor_gives_empty_stream(ec):
    comps = _cover(ec, [], CoverBudgets(kmax=4, open_scan=500, level_cap=12))
    assert comps == []
    verdict = semidecide_from_cover(ec, comps, 3)
    assert isinstance(verdict, NoVerdictYet)
    assert not verdict.budget_hit
    flagged = semidecide_from_cover(ec, comps, 3, cover_truncated=True)
    assert flagged.budget_hit


def test_component_stream_is_deterministic(ec):
    first = [(c.k, c.v) for c in _cover(ec, [(1,), (2, 0)])]
    second = [(c.k, c.v) for c in _cover(ec, [(1,), (2, 0)])]
    assert first == second


def test_verify_single_cylinder_fixture(ec):
    comps = _cover(ec, [(1,)])
    report = verify_cover_truncation(ec, [(1,)], comps, 60)
    assert report.disagreements == []
    assert 2 in report.accepted
    assert set(report.inconclusive) == set(report.budget_flagged)


def test_verify_empty_fixture_all_agree(ec):
    report = verify_cover_truncation(ec, [], [], 50)
    assert report.agreements == list(range(51))
    assert report.disagreements == []
    assert report.inconclusive == []


def test_verify_two_cylinder_fixture(ec):
    cylinders = [(1,), (2, 0)]
    comps = _cover(ec, cylinders)
    report = verify_cover_truncation(ec, cylinders, comps, 60)
    assert report.disagreements == []
    # the constant-one function comes cheap and is admitted outright
    assert 2 in report.accepted
    # f_8 = (2,0,0,...) is a member, but its length-2 prefix already costs 8,
    # past anything a base-4 order can pay for before its second check
    assert 8 in report.inconclusive and 8 in report.budget_flagged


def test_deep_cover_settles_every_index_for_the_full_space(ec):
    budgets = CoverBudgets(
        kmax=50, open_scan=1400, cert_take=1400, max_points=6,
        max_components=40000, level_cap=56,
    )
    comps = _cover(ec, [()], budgets)
    report = verify_cover_truncation(ec, [()], comps, 50)
    assert report.agreements == list(range(51))
    assert report.disagreements == []
    assert report.inconclusive == []
    assert all(isinstance(semidecide_from_cover(ec, comps, i), Accept) for i in range(0, 51, 7))


def test_cover_json_round_trip(ec):
    comps = _cover(ec, [(1,)])[:6]
    for comp in comps:
        assert comp.ensure_points(3)
    data = json.loads(json.dumps(cover_to_json(ec, comps), sort_keys=True))
    class_id, loaded = cover_from_json(data)
    assert class_id == "ec"
    assert [(c.k, c.v) for c in loaded] == [(c.k, c.v) for c in comps]
    assert all(c.horizon == c.order.points[-1] for c in loaded)
    assert isinstance(semidecide_from_cover(ec, loaded, 2), Accept)


def test_materialized_cover_is_strict_past_its_horizon(ec):
    _, loaded = cover_from_json(
        {
            "class": "ec",
            "components": [{"k": 1, "v": [0], "breakpoints": [1], "horizon": 1}],
        }
    )
    # f_28 = (0,0,1,...) has free prefixes up to length 2, so the walk clears
    # both checks the horizon can see and then needs a value past it
    verdict = semidecide_from_cover(ec, loaded, 28)
    assert isinstance(verdict, NoVerdictYet)
    assert verdict.budget_hit
    assert "order known only up to 1" in verdict.detail


def test_budget_doubling_helper():
    doubled = SMALL.doubled()
    assert doubled.kmax == 8
    assert doubled.open_scan == 2000
    assert doubled.max_components == 96
    assert CoverBudgets(kmax=None).doubled().kmax is None
