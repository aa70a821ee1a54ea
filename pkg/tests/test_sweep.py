import pytest

import tricount as tc
from tricount import oracle

from conftest import random_point_set


def test_initial_path(fan5, conv5, tri3):
    assert tc.initial_path(fan5) == (1, 0, 4)
    assert tc.initial_path(conv5) == (1, 0, 4)
    key = tc.initial_path(tri3)
    assert key[1] == 0 and sorted(key) == [0, 1, 2]


def test_run_sweep_basics(fan5, conv5, tri3):
    assert tc.run_sweep(tc.TRI_SYSTEM, tri3)[0] == 1
    assert tc.run_sweep(tc.TRI_SYSTEM, conv5)[0] == 5
    assert tc.run_sweep(tc.TRI_SYSTEM, fan5)[0] == 3


def test_stats_boundaries(fan5):
    for system in (tc.TRI_SYSTEM, tc.PT_SYSTEM):
        _, stats, _ = tc.run_sweep(system, fan5)
        assert stats.t_per_line[0] == 1
        assert stats.t_per_line[-1] == 1
        assert len(stats.t_per_line) == fan5.n - 1
        assert stats.t_max == max(stats.t_per_line)


def test_paths_cross(conv5):
    keys = sorted(oracle.collect_paths(conv5, 2, "tri"))
    for k in keys:
        assert not tc.paths_cross(k, k, conv5)
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            assert tc.paths_cross(keys[a], keys[b], conv5)


def test_initial_successor_compatible(fan5):
    k0 = tc.initial_path(fan5)
    for s in tc.tpath_successors(tc.TPath(k0, 1), fan5):
        assert not tc.paths_cross(k0, s, fan5)


def test_parent_counts_add_up(fan5):
    _, _, tables = tc.run_sweep(tc.TRI_SYSTEM, fan5, record_parents=True)
    assert set(tables[0].entries) == {tc.initial_path(fan5)}
    assert tables[0].entries[tc.initial_path(fan5)].count == 1
    for prev, cur in zip(tables, tables[1:]):
        for key, entry in cur.entries.items():
            assert entry.count >= 1
            assert entry.count == sum(
                prev.entries[p].count for p in entry.parents)
            assert len(set(entry.parents)) == len(entry.parents)


def test_threads_do_not_change_results():
    P = random_point_set(7, 42)
    c1, s1, _ = tc.run_sweep(tc.TRI_SYSTEM, P, threads=1)
    c4, s4, _ = tc.run_sweep(tc.TRI_SYSTEM, P, threads=4)
    assert c1 == c4
    assert s1.t_per_line == s4.t_per_line


def test_system_for():
    assert tc.system_for("tri") is tc.TRI_SYSTEM
    assert tc.system_for("pt") is tc.PT_SYSTEM
    with pytest.raises(ValueError):
        tc.system_for("other")


@pytest.mark.parametrize("n,seed", [(5, 10), (6, 11), (7, 12)])
def test_sweep_matches_oracle_random(n, seed):
    P = random_point_set(n, seed)
    assert tc.run_sweep(tc.TRI_SYSTEM, P)[0] == \
        oracle.enumerate_triangulations(P).count
    assert tc.run_sweep(tc.PT_SYSTEM, P)[0] == \
        oracle.enumerate_pointed_pseudotriangulations(P).count
