import pytest

import tricount as tc
import tricount.geom as geom
from tricount import oracle, ptpath
from tricount.errors import EdgeDoesNotCrossLine, PreconditionViolated
from tricount.ptpath import PTPath, ptpath_chains

from conftest import fan5_star_triangulation, random_point_set


def test_is_pointed(fan5):
    star = fan5_star_triangulation()
    spokes = {(0, 2), (1, 2), (2, 3), (2, 4)}
    assert not tc.is_pointed(spokes, 2, fan5)  # surrounded interior vertex
    assert tc.is_pointed({(0, 2), (1, 2)}, 2, fan5)  # degree 2
    for v in (0, 1, 3, 4):  # hull vertices stay pointed even in the star
        assert tc.is_pointed(star, v, fan5)
    assert tc.is_pointed({(0, 1)}, 2, fan5)  # isolated: pointed by convention


def test_validate_pseudotriangulation(fan5, conv5):
    fan = {(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)}
    assert tc.validate_pseudotriangulation(fan, conv5)
    star = fan5_star_triangulation()
    r = tc.validate_pseudotriangulation(star, fan5)
    assert not r and r.reason == "not_pointed"
    hull_only = {(0, 1), (1, 3), (3, 4), (0, 4)}
    r = tc.validate_pseudotriangulation(hull_only, fan5)
    assert not r and r.reason == "not_maximal"
    r = tc.validate_pseudotriangulation({(0, 3), (1, 4)}, fan5)
    assert not r and r.reason == "edges_cross"


def test_oracle_structures_validate(fan5):
    for S in oracle.enumerate_pointed_pseudotriangulations(fan5).structures:
        assert tc.validate_pseudotriangulation(S, fan5)
        assert len(S) == 2 * fan5.n - 3


def test_validate_ptpath_initial(fan5):
    assert tc.validate_ptpath(PTPath((1, 0, 4), 1), fan5)
    r = tc.validate_ptpath(PTPath((4, 0, 1), 1), fan5)
    assert not r


def test_extract_ptpath(fan5, tri3):
    T = frozenset({(0, 1), (0, 2), (1, 2)})
    assert tc.extract_ptpath(T, 1, tri3).vertices == \
        tc.extract_tpath(T, 1, tri3).vertices
    for S in oracle.enumerate_pointed_pseudotriangulations(fan5).structures:
        for i in range(1, fan5.n):
            path = tc.extract_ptpath(S, i, fan5)
            assert tc.validate_ptpath(path, fan5)
            assert len(ptpath_chains(fan5, i, pool=S)) == 1


def test_convex_position_pt_equals_t(conv5):
    # in convex position every pseudo-triangulation is a triangulation
    tri = oracle.enumerate_triangulations(conv5)
    pt = oracle.enumerate_pointed_pseudotriangulations(conv5)
    assert set(tri.structures) == set(pt.structures)
    for T in tri.structures:
        for i in range(1, conv5.n):
            assert tc.extract_ptpath(T, i, conv5).vertices == \
                tc.extract_tpath(T, i, conv5).vertices


def test_crossing_positions(fan5):
    S = next(iter(oracle.enumerate_pointed_pseudotriangulations(
        fan5).structures))
    path = tc.extract_ptpath(S, 2, fan5)
    ys = [fan5.cross_y(path.edges()[k], 2) for k in path.crossing_positions()]
    assert ys == sorted(ys)
    assert len(ys) >= 2


def test_pt_good_edge(fan5):
    S = frozenset(sorted(oracle.enumerate_pointed_pseudotriangulations(
        fan5).structures)[0])
    for e in S:
        if geom.edge_crosses_line(e, 2):
            hull_edges = {(0, 1), (1, 3), (3, 4), (0, 4)}
            if e in hull_edges:
                assert tc.pt_good_edge(S, e, 2, fan5)
    with pytest.raises(EdgeDoesNotCrossLine):
        tc.pt_good_edge(S, (0, 1), 2, fan5)


def test_good_edges_are_path_crossings():
    # signpost rule agrees with the extracted path's crossing edges
    for n, seed in ((5, 20), (6, 21), (7, 22)):
        P = random_point_set(n, seed)
        for S in oracle.enumerate_pointed_pseudotriangulations(P).structures:
            for i in range(1, P.n):
                path = tc.extract_ptpath(S, i, P)
                crossing = {e for e in path.edges()
                            if geom.edge_crosses_line(e, i)}
                good = {e for e in S if geom.edge_crosses_line(e, i)
                        and tc.pt_good_edge(S, e, i, P)}
                assert good == crossing


def test_every_edge_on_some_ptpath(fan5):
    for S in oracle.enumerate_pointed_pseudotriangulations(fan5).structures:
        covered = set()
        for i in range(1, fan5.n):
            covered |= set(tc.extract_ptpath(S, i, fan5).edges())
        assert covered == set(S)


def test_successors_forced(tri3):
    succ = tc.ptpath_successors(PTPath(tc.initial_path(tri3), 1), tri3)
    assert len(succ) == 1


def test_successors_match_oracle(fan5):
    k0 = tc.initial_path(fan5)
    succ = tc.ptpath_successors(PTPath(k0, 1), fan5)
    assert succ == oracle.collect_paths(fan5, 2, "pt")


def test_successors_reject_invalid_parent(fan5):
    with pytest.raises(PreconditionViolated):
        tc.ptpath_successors(PTPath((4, 0, 1), 1), fan5)


def test_successor_count_quartic():
    P = random_point_set(7, 23)
    c = 2  # generous constant for the O(n^4) population bound
    for i in range(1, P.n - 1):
        for k in oracle.collect_paths(P, i, "pt"):
            assert len(tc.ptpath_successors(PTPath(k, i), P)) <= c * P.n ** 4


def test_validate_rejects_unpointed_chain():
    # a chain whose own edges surround one of its vertices is never a PT-path
    for n, seed in ((6, 31), (6, 32), (7, 33)):
        P = random_point_set(n, seed)
        for i in range(1, P.n):
            for key in ptpath_chains(P, i):
                assert ptpath._all_pointed(set(tc.TPath(key, i).edges()), P)
