"""Computable orders: evaluation, thresholds, serialization."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from ceclab import (
    BreakpointsOrder,
    BudgetExhausted,
    IdentityOrder,
    MinClauseOrder,
    TableOrder,
    load_order,
    order_from_json,
)

increasing_points = st.lists(
    st.integers(min_value=1, max_value=40), min_size=1, max_size=6, unique=True
).map(sorted).map(list)


def naive_threshold(order, m, horizon=300):
    for n in range(horizon):
        if order.eval(n) >= m:
            return n
    raise AssertionError("order failed to reach the bound")


def test_identity():
    h = IdentityOrder()
    assert [h.eval(n) for n in range(5)] == [0, 1, 2, 3, 4]
    assert h.inverse_threshold(17) == 17
    assert h.inverse_threshold(0) == 0


def test_table_values_and_tail():
    h = TableOrder(values=(0, 0, 1, 2, 4), tail_slope=2)
    assert [h.eval(n) for n in range(5)] == [0, 0, 1, 2, 4]
    assert h.eval(5) == 6 and h.eval(7) == 10
    assert h.inverse_threshold(4) == 4
    assert h.inverse_threshold(5) == 5


def test_table_rejects_decreasing_values():
    with pytest.raises(ValueError):
        TableOrder(values=(3, 1), tail_slope=1)
    with pytest.raises(ValueError):
        TableOrder(values=(0, 1), tail_slope=0)


@given(st.integers(min_value=0, max_value=8), increasing_points, st.integers(min_value=0, max_value=30))
def test_breakpoints_closed_form_threshold(base, points, m):
    h = BreakpointsOrder(base=base, points=points)
    assert h.inverse_threshold(m) == naive_threshold(h, m)


@given(st.integers(min_value=0, max_value=8), increasing_points)
def test_breakpoints_nondecreasing_and_bounded(base, points):
    h = BreakpointsOrder(base=base, points=points)
    values = [h.eval(n) for n in range(60)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    # the form can never climb faster than base + p + 1
    assert all(values[p] <= base + p + 1 for p in range(60))


def test_breakpoints_segment_values():
    h = BreakpointsOrder(base=2, points=[3, 5, 9])
    assert [h.eval(p) for p in (0, 3, 4, 5, 6, 9)] == [3, 3, 4, 4, 5, 5]
    assert h.eval(10) == 6  # slope-one tail past the last point


def test_strict_order_raises_past_horizon():
    h = BreakpointsOrder(base=0, points=[2, 4], strict=True)
    assert h.eval(4) == 2
    with pytest.raises(BudgetExhausted):
        h.eval(5)
    with pytest.raises(BudgetExhausted):
        h.inverse_threshold(4)


def test_extender_without_progress_is_detected():
    h = BreakpointsOrder(base=0, points=[], extender=lambda count: True)
    with pytest.raises(BudgetExhausted):
        h.eval(1)


def test_extender_grows_on_demand():
    # the constructor copies the list, so the extender must grow h.points
    def extend(count):
        while len(h.points) < count:
            h.points.append(3 * (len(h.points) + 1))
        return True

    h = BreakpointsOrder(base=1, points=[], extender=extend)
    assert h.eval(7) == 4  # needs points 3, 6, 9
    assert h.points == [3, 6, 9]
    assert h.inverse_threshold(6) == 13  # just past the fourth point
    assert h.points == [3, 6, 9, 12]


def test_points_must_increase_strictly():
    with pytest.raises(ValueError):
        BreakpointsOrder(base=0, points=[2, 2])
    with pytest.raises(ValueError):
        MinClauseOrder(base=0, points=[5, 3])


def test_minclause_values():
    h = MinClauseOrder(base=0, points=[2, 3, 4])
    assert [h.eval(p) for p in (0, 2, 3, 4, 5, 9)] == [1, 1, 2, 3, 4, 8]
    trapped = MinClauseOrder(base=5, points=[2, 3, 4])
    # the implicit continuation puts point #4 at 5, #5 at 6, ...
    assert [trapped.eval(p) for p in (0, 4, 5, 6, 7)] == [5, 5, 5, 5, 6]


@given(st.integers(min_value=0, max_value=6), increasing_points, st.integers(min_value=0, max_value=20))
def test_minclause_threshold_matches_walk(base, points, m):
    h = MinClauseOrder(base=base, points=points)
    assert h.inverse_threshold(m) == naive_threshold(h, m)


def test_json_round_trips():
    orders = [
        IdentityOrder(),
        TableOrder(values=(1, 1, 2), tail_slope=3),
        BreakpointsOrder(base=4, points=[1, 6]),
        MinClauseOrder(base=2, points=[3, 4, 9]),
    ]
    for h in orders:
        clone = order_from_json(json.loads(json.dumps(h.to_json())))
        assert [clone.eval(n) for n in range(25)] == [h.eval(n) for n in range(25)]


def test_order_from_json_rejects_unknown_kind():
    with pytest.raises(ValueError):
        order_from_json({"kind": "mystery"})


def test_load_order_forms(tmp_path):
    assert isinstance(load_order("identity"), IdentityOrder)
    inline = load_order('{"kind":"breakpoints","base":1,"points":[2,5]}')
    assert isinstance(inline, BreakpointsOrder) and inline.base == 1
    path = tmp_path / "order.json"
    path.write_text(json.dumps({"kind": "minclause", "base": 0, "points": [4]}))
    from_file = load_order(str(path))
    assert isinstance(from_file, MinClauseOrder)
