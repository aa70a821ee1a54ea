import pytest

import tricount as tc
from tricount import oracle
from tricount.errors import CapExceeded, TooLarge

from conftest import conv_points, random_point_set


def test_catalan():
    assert [tc.catalan(m) for m in range(9)] == \
        [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_triangulation_counts(fan5, conv6, tri3):
    assert oracle.enumerate_triangulations(tri3).count == 1
    assert oracle.enumerate_triangulations(conv6).count == 14
    assert oracle.enumerate_triangulations(fan5).count == 3


def test_pt_counts(fan5, conv5, tri3):
    assert oracle.enumerate_pointed_pseudotriangulations(tri3).count == 1
    assert oracle.enumerate_pointed_pseudotriangulations(conv5).count == 5
    # golden value pinned by this enumerator
    assert oracle.enumerate_pointed_pseudotriangulations(fan5).count == 8


def test_convex_position_catalan():
    for n in range(3, 9):
        P = tc.validate_point_set(conv_points(n))
        assert oracle.enumerate_triangulations(P).count == tc.catalan(n - 2)


def test_structure_invariants(fan5):
    tri = oracle.enumerate_triangulations(fan5)
    assert len(set(tri.structures)) == tri.count
    for T in tri.structures:
        assert len(T) == 3 * fan5.n - 3 - 4
    pt = oracle.enumerate_pointed_pseudotriangulations(fan5)
    assert len(set(pt.structures)) == pt.count
    for S in pt.structures:
        assert len(S) == 2 * fan5.n - 3
        assert tc.validate_pseudotriangulation(S, fan5)


def test_guards():
    P = random_point_set(13, 1)
    with pytest.raises(TooLarge):
        oracle.enumerate_triangulations(P)
    Q = random_point_set(11, 2)
    with pytest.raises(TooLarge):
        oracle.enumerate_pointed_pseudotriangulations(Q)


def test_cap(conv6):
    with pytest.raises(CapExceeded):
        oracle.enumerate_triangulations(conv6, cap=5)


def test_collect_paths(fan5, conv5):
    for fam in ("tri", "pt"):
        assert len(oracle.collect_paths(fan5, 1, fam)) == 1
    tri = oracle.enumerate_triangulations(conv5)
    for i in range(1, conv5.n):
        assert len(oracle.collect_paths(conv5, i, "tri")) <= tri.count


def test_flip_closure_matches_enumeration(fan5):
    for P in (fan5, random_point_set(6, 5), random_point_set(7, 6)):
        res = oracle.enumerate_triangulations(P)
        closure = oracle.triangulations_via_flips(P, res.structures[0])
        assert closure == set(res.structures)


def test_enumerate_structures_dispatch(tri3):
    assert oracle.enumerate_structures(tri3, "tri").family == "tri"
    assert oracle.enumerate_structures(tri3, "pt").family == "pt"
    with pytest.raises(ValueError):
        oracle.enumerate_structures(tri3, "x")
