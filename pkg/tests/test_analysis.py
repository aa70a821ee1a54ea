from math import comb

import pytest

import tricount as tc
from tricount.analysis import bound_sequence, report


def test_golden_values():
    rows = bound_sequence(6)
    assert [r.f for r in rows] == [0, 1, 3, 13, 67, 381, 2307]
    assert rows[0].g == 0
    assert rows[1].g == 1


def test_boundary():
    rows = bound_sequence(0)
    assert len(rows) == 1
    assert rows[0].f == 0 and rows[0].g == 0
    with pytest.raises(ValueError):
        bound_sequence(-1)


def test_growth_ratio():
    rows = bound_sequence(200)
    ratio = rows[200].f / rows[199].f
    assert abs(ratio - 8) / 8 < 0.05
    for r in rows[1:]:
        assert r.f < 8 ** r.k


def test_binomial_identity():
    for a in range(31):
        assert sum(comb(a, i) * 8 ** i for i in range(a + 1)) == 9 ** a


def test_report(tri3, conv5):
    count, stats, _ = tc.run_sweep(tc.TRI_SYSTEM, tri3)
    rep = report(stats, tri3, "tri", count, 1.0)
    assert rep.t_per_line == [1, 1]
    assert rep.t_max == 1
    assert rep.t_max_within_nine_pow_n is True

    count, stats, _ = tc.run_sweep(tc.TRI_SYSTEM, conv5)
    rep = report(stats, conv5, "tri", count, 1.0)
    assert rep.t_max <= count  # small convex case
    assert rep.count == 5 and rep.n == 5 and rep.family == "tri"

    count, stats, _ = tc.run_sweep(tc.PT_SYSTEM, conv5)
    rep = report(stats, conv5, "pt", count, 1.0)
    assert rep.t_max_within_nine_pow_n is None  # no pt bound exists


def test_fan5_t_per_line_golden(fan5):
    # values pinned after the oracle-validated first run
    _, stats, _ = tc.run_sweep(tc.TRI_SYSTEM, fan5)
    assert stats.t_per_line == [1, 2, 2, 1]
    _, stats, _ = tc.run_sweep(tc.PT_SYSTEM, fan5)
    assert stats.t_per_line == [1, 4, 4, 1]
