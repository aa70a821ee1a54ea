"""Sweep-line dynamic program over path families.

The sweep walks the lines l_1 .. l_{n-1}, keeping for every path pi in the
current population the number of compatible path prefixes T(pi).  Counts
are merged by canonical path key (the vertex tuple), so the final table at
l_{n-1} holds a single entry whose count is the number of structures.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import ptpath, tpath
from .errors import InternalInvariantViolation, MemoryBudgetExceeded
from .geom import PointSet, seg
from .tpath import Check, PathKey, chain_edges


@dataclass(frozen=True)
class PathSystem:
    family: str  # "tri" or "pt"
    initial: Callable[[PointSet], PathKey]
    successors: Callable[[PathKey, int, PointSet], Iterable[PathKey]]
    validate: Callable[[PathKey, int, PointSet], Check]


@dataclass
class SweepStats:
    t_per_line: list[int]
    line_seconds: list[float] = field(default_factory=list)

    @property
    def t_max(self) -> int:
        return max(self.t_per_line)


@dataclass
class TableEntry:
    count: int
    parents: list[PathKey] = field(default_factory=list)


@dataclass
class PathTable:
    line: int
    entries: dict[PathKey, TableEntry]


def initial_path(P: PointSet) -> PathKey:
    """The forced path at l_1: the two hull edges at the leftmost point."""
    hull = P.convex_hull()
    pos = hull.index(0)
    b = hull[(pos - 1) % len(hull)]
    c = hull[(pos + 1) % len(hull)]
    if P.cross_y(seg(0, b), 1) > P.cross_y(seg(0, c), 1):
        b, c = c, b
    return (b, 0, c)


def paths_cross(k1: PathKey, k2: PathKey, P: PointSet) -> bool:
    e1 = chain_edges(k1)
    e2 = chain_edges(k2)
    return any(P.segments_cross(a, b) for a in e1 for b in e2)


TRI_SYSTEM = PathSystem(
    family="tri",
    initial=initial_path,
    successors=lambda key, i, P: tpath.tpath_successors(tpath.TPath(key, i), P),
    validate=lambda key, i, P: tpath.validate_tpath(tpath.TPath(key, i), P),
)

PT_SYSTEM = PathSystem(
    family="pt",
    initial=initial_path,
    successors=lambda key, i, P: ptpath.ptpath_successors(
        ptpath.PTPath(key, i), P),
    validate=lambda key, i, P: ptpath.validate_ptpath(
        ptpath.PTPath(key, i), P),
)


def system_for(family: str) -> PathSystem:
    if family == "tri":
        return TRI_SYSTEM
    if family == "pt":
        return PT_SYSTEM
    raise ValueError(f"unknown family {family!r}")


def run_sweep(system: PathSystem, P: PointSet, record_parents: bool = False,
              threads: int = 1,
              max_table_entries: Optional[int] = None
              ) -> tuple[int, SweepStats, Optional[list[PathTable]]]:
    """Count structures; optionally retain all tables for the sampler."""
    key0 = system.initial(P)
    counts: dict[PathKey, int] = {key0: 1}
    tables: Optional[list[PathTable]] = None
    total_entries = 1
    if record_parents:
        tables = [PathTable(1, {key0: TableEntry(1)})]
    stats = SweepStats(t_per_line=[1])

    for i in range(1, P.n - 1):
        t0 = time.perf_counter()
        parent_keys = sorted(counts)
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                succ_sets = list(pool.map(
                    lambda k: system.successors(k, i, P), parent_keys))
        else:
            succ_sets = [system.successors(k, i, P) for k in parent_keys]

        nxt: dict[PathKey, TableEntry] = {}
        for k, succs in zip(parent_keys, succ_sets):
            c = counts[k]
            for s in sorted(set(succs)):
                entry = nxt.get(s)
                if entry is None:
                    entry = nxt[s] = TableEntry(0)
                entry.count += c
                if record_parents:
                    entry.parents.append(k)
        if not nxt:
            raise InternalInvariantViolation(
                f"population at l_{i + 1} is empty")
        counts = {k: e.count for k, e in nxt.items()}
        stats.t_per_line.append(len(nxt))
        stats.line_seconds.append(time.perf_counter() - t0)
        if record_parents:
            total_entries += len(nxt)
            if max_table_entries is not None and total_entries > max_table_entries:
                raise MemoryBudgetExceeded(
                    f"path tables exceed {max_table_entries} entries")
            tables.append(PathTable(i + 1, nxt))

    if len(counts) != 1:
        raise InternalInvariantViolation(
            f"expected a single path at l_{P.n - 1}, got {len(counts)}")
    final = next(iter(counts.values()))
    return final, stats, tables
