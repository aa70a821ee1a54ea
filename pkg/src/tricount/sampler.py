"""Uniform random generation by reverse sweep over recorded path tables.

Walking backwards from the unique path at l_{n-1}, a parent pi at l_i is
chosen with probability count(pi)/count(pi') among the recorded parents of
pi'.  The telescoping product makes every compatible path tuple, and hence
every structure, equally likely.  Parent choice uses exact big-integer
cumulative thresholds; no floating point is involved.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import FrozenSet, Optional

from . import ptpath, tpath
from .errors import IncompatibleTuple, InternalInvariantViolation
from .geom import PointSet, Segment
from .sweep import PathKey, PathTable, run_sweep, system_for
from .tpath import chain_edges

EdgeSet = FrozenSet[Segment]


@dataclass
class ReconstructedStructure:
    family: str
    edges: EdgeSet


@dataclass
class SampleRun:
    seed: int
    family: str
    tuples: list[list[PathKey]]
    structures: list[ReconstructedStructure]


def _draw_tuple(tables: list[PathTable], rng: random.Random) -> list[PathKey]:
    last = tables[-1]
    (key, entry), = last.entries.items()
    chosen = [key]
    for table in reversed(tables[:-1]):
        r = rng.randrange(entry.count)
        acc = 0
        for parent in entry.parents:
            acc += table.entries[parent].count
            if r < acc:
                break
        else:
            raise InternalInvariantViolation("parent counts do not add up")
        key, entry = parent, table.entries[parent]
        chosen.append(key)
    chosen.reverse()
    return chosen


def reconstruct(tuple_keys: list[PathKey], P: PointSet,
                family: str) -> ReconstructedStructure:
    """Union of the tuple's edges, greedily completed to a maximal set.

    The completion is independent of the greedy order because a compatible
    tuple determines its structure uniquely; lexicographic candidate order
    is used for determinism anyway.
    """
    edges: set[Segment] = set()
    for key in tuple_keys:
        edges.update(chain_edges(key))
    elist = sorted(edges)
    for a in range(len(elist)):
        for b in range(a + 1, len(elist)):
            if P.segments_cross(elist[a], elist[b]):
                raise IncompatibleTuple("tuple union has crossing edges")
    if family == "pt" and not ptpath._all_pointed(edges, P):
        raise IncompatibleTuple("tuple union is not pointed")

    for a in range(P.n):
        for b in range(a + 1, P.n):
            e = (a, b)
            if e in edges:
                continue
            if any(P.segments_cross(e, f) for f in edges):
                continue
            if family == "pt":
                trial = edges | {e}
                if not (ptpath.is_pointed(trial, a, P)
                        and ptpath.is_pointed(trial, b, P)):
                    continue
            edges.add(e)

    if family == "tri":
        target = tpath.triangulation_edge_target(P)
        if len(edges) != target:
            raise InternalInvariantViolation(
                f"completed to {len(edges)} edges, expected {target}")
    else:
        check = ptpath.validate_pseudotriangulation(edges, P)
        if not check:
            raise InternalInvariantViolation(
                f"completion is not a pseudo-triangulation: {check.reason}")
    return ReconstructedStructure(family, frozenset(edges))


def sample(P: PointSet, family: str, seed: int, m: int,
           max_table_entries: Optional[int] = None) -> SampleRun:
    """Draw m structures i.i.d. uniformly at random."""
    system = system_for(family)
    _, _, tables = run_sweep(system, P, record_parents=True,
                             max_table_entries=max_table_entries)
    rng = random.Random(seed)
    tuples = []
    structures = []
    for _ in range(m):
        chosen = _draw_tuple(tables, rng)
        tuples.append(chosen)
        structures.append(reconstruct(chosen, P, family))
    return SampleRun(seed, family, tuples, structures)
