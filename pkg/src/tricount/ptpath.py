"""PT-paths: zig-zag chains of pointed pseudo-triangulation edges.

A chain is a valid PT-path w.r.t. l_i when its crossing edges have strictly
increasing ordinates with the two hull crossing edges first and last, each
maximal sub-chain between consecutive crossings (an "excursion") stays on
one side and bounds, together with the line, an empty pseudo-triangle, the
edges are pairwise non-crossing, and the chain's own edge union is pointed.

A pseudo-triangle has exactly three convex corners; two of them always sit
at the line crossings, so the structural test reduces to "exactly one
convex turn among the excursion vertices" plus region emptiness.

As with T-paths, validity coincides with membership in the population: a
valid chain completes to a maximal planar pointed edge set, of which it is
the unique PT-path.  Extraction and successor generation are therefore one
constrained depth-first search.
"""

from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional

from . import geom
from .errors import (
    EdgeDoesNotCrossLine,
    InternalInvariantViolation,
    PreconditionViolated,
)
from .geom import CCW, CW, RIGHT, PointSet, Segment, seg
from .tpath import Check, PathKey, chain_edges

EdgeSet = FrozenSet[Segment]


@dataclass(frozen=True)
class PTPath:
    vertices: PathKey
    line: int

    def edges(self) -> list[Segment]:
        return chain_edges(self.vertices)

    def crossing_positions(self) -> list[int]:
        """Indices k such that edge (v_k, v_{k+1}) crosses the line."""
        return [k for k, e in enumerate(self.edges())
                if geom.edge_crosses_line(e, self.line)]


def pseudotriangulation_edge_target(P: PointSet) -> int:
    return 2 * P.n - 3


# -- pointedness ---------------------------------------------------------

def is_pointed(edges: Iterable[Segment], v: int, P: PointSet) -> bool:
    """True iff v's incident edges leave an angular gap larger than pi.

    Isolated vertices are pointed by convention.  Exact test: the incident
    directions fit in an open half-plane iff some direction has all others
    strictly counterclockwise of it within less than pi.
    """
    px, py = P.points[v]
    dirs = []
    for (a, b) in edges:
        if v == a:
            u = b
        elif v == b:
            u = a
        else:
            continue
        dirs.append((P.points[u][0] - px, P.points[u][1] - py))
    if len(dirs) <= 2:
        return True
    for j, dj in enumerate(dirs):
        if all(dj[0] * dk[1] - dj[1] * dk[0] > 0
               for k, dk in enumerate(dirs) if k != j):
            return True
    return False


def _all_pointed(edges: Iterable[Segment], P: PointSet) -> bool:
    edges = set(edges)
    touched = {v for e in edges for v in e}
    return all(is_pointed(edges, v, P) for v in touched)


def validate_pseudotriangulation(edges: Iterable[Segment], P: PointSet) -> Check:
    """Maximal planar pointed edge set check."""
    es = set(edges)
    elist = sorted(es)
    for a in range(len(elist)):
        for b in range(a + 1, len(elist)):
            if P.segments_cross(elist[a], elist[b]):
                return Check(False, "edges_cross")
    for v in range(P.n):
        if not is_pointed(es, v, P):
            return Check(False, "not_pointed")
    for a in range(P.n):
        for b in range(a + 1, P.n):
            f = (a, b)
            if f in es:
                continue
            if any(P.segments_cross(f, e) for e in es):
                continue
            with_f = es | {f}
            if is_pointed(with_f, a, P) and is_pointed(with_f, b, P):
                return Check(False, "not_maximal")
    return Check(True)


# -- excursion geometry --------------------------------------------------

def _convex_turn(q: int, w: int, u: int, side: int, P: PointSet) -> bool:
    # the excursion polygon runs CCW on the right of the line, CW on the left
    want = CCW if side == RIGHT else CW
    return P.orient(q, w, u) == want


def _region_empty(P: PointSet, i: int, exc: list[int],
                  y_lo: Fraction, y_hi: Fraction) -> bool:
    c = Fraction(P.line_x(i))
    poly = [(c, y_lo)]
    poly += [(Fraction(P.spoint(w)[0]), Fraction(P.spoint(w)[1])) for w in exc]
    poly.append((c, y_hi))
    side = P.side(exc[0], i)
    excset = set(exc)
    for q in range(P.n):
        if q in excset or P.side(q, i) != side:
            continue
        sq = P.spoint(q)
        if geom.point_in_polygon_strict((Fraction(sq[0]), Fraction(sq[1])), poly):
            return False
    return True


# -- chain search --------------------------------------------------------

def ptpath_chains(P: PointSet, i: int,
                  pool: Optional[EdgeSet] = None,
                  obstacles: Iterable[Segment] = (),
                  pointed_with: Iterable[Segment] = ()) -> list[PathKey]:
    """All valid PT-path chains w.r.t. l_i.

    With a pool, edges are restricted to it and the final pointedness check
    is skipped (a subset of a pointed set is pointed).  Obstacles must not
    be crossed; pointed_with edges join the chain for the union-pointedness
    filter (the parent path during successor generation).
    """
    lo, hi = geom.hull_crossing_edges(P, i)
    obst = list(obstacles)
    extra = list(pointed_with)
    out: list[PathKey] = []

    if pool is not None:
        adj: dict[int, list[int]] = {}
        for (a, b) in pool:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)

    def blocked(e: Segment, chain_edge_list: list[Segment]) -> bool:
        if any(P.segments_cross(e, f) for f in obst):
            return True
        if pool is None and any(P.segments_cross(e, f) for f in chain_edge_list):
            return True
        return False

    def finish(chain: list[int]) -> None:
        if pool is None:
            edges = set(chain_edges(chain)) | set(extra)
            if not _all_pointed(edges, P):
                return
        out.append(tuple(chain))

    def extend(chain: list[int], edges: list[Segment],
               exc_prev: int, exc: list[int], convex: int,
               last_y: Fraction) -> None:
        v = exc[-1]
        q = exc[-2] if len(exc) > 1 else exc_prev
        side = P.side(v, i)
        cands = adj.get(v, ()) if pool is not None else range(P.n)
        for w in cands:
            if w == v:
                continue
            e = seg(v, w)
            if pool is not None and e not in pool:
                continue
            if P.side(w, i) == side:
                # stay on this side: grow the excursion
                if w in exc:
                    continue
                c2 = convex + (1 if _convex_turn(q, v, w, side, P) else 0)
                if c2 > 1:
                    continue
                if blocked(e, edges):
                    continue
                chain.append(w)
                edges.append(e)
                exc.append(w)
                extend(chain, edges, exc_prev, exc, c2, last_y)
                exc.pop()
                edges.pop()
                chain.pop()
            else:
                # cross back: close the excursion as a pseudo-triangle
                y = P.cross_y(e, i)
                if y <= last_y:
                    continue
                c2 = convex + (1 if _convex_turn(q, v, w, side, P) else 0)
                if c2 != 1:
                    continue
                if blocked(e, edges):
                    continue
                if not _region_empty(P, i, exc, last_y, y):
                    continue
                chain.append(w)
                edges.append(e)
                if e == hi:
                    finish(chain)
                else:
                    extend(chain, edges, v, [w], 0, y)
                edges.pop()
                chain.pop()

    if pool is not None and (lo not in pool or hi not in pool):
        return []
    y0 = P.cross_y(lo, i)
    a, b = lo
    for (v0, v1) in ((a, b), (b, a)):
        extend([v0, v1], [lo], v0, [v1], 0, y0)
    return out


def extract_ptpath(S: EdgeSet, i: int, P: PointSet) -> PTPath:
    """The unique PT-path of pseudo-triangulation S w.r.t. l_i."""
    chains = ptpath_chains(P, i, pool=frozenset(S))
    if len(chains) != 1:
        raise InternalInvariantViolation(
            f"expected exactly one PT-path at l_{i}, found {len(chains)}")
    return PTPath(chains[0], i)


def ptpath_successors(path: PTPath, P: PointSet) -> set[PathKey]:
    """PT-paths at l_{i+1} non-crossing with path and jointly pointed."""
    check = validate_ptpath(path, P)
    if not check:
        raise PreconditionViolated(f"invalid parent PT-path: {check.reason}")
    if path.line >= P.n - 1:
        raise PreconditionViolated("no line beyond the last sweep position")
    es = path.edges()
    return set(ptpath_chains(P, path.line + 1, obstacles=es, pointed_with=es))


# -- validation ----------------------------------------------------------

def validate_ptpath(path: PTPath, P: PointSet) -> Check:
    vs = path.vertices
    i = path.line
    if not 1 <= i <= P.n - 1:
        return Check(False, "bad_line_index")
    if len(vs) < 3:
        return Check(False, "too_short")
    for k in range(len(vs) - 1):
        if vs[k] == vs[k + 1]:
            return Check(False, "degenerate_edge")
    edges = chain_edges(vs)
    lo, hi = geom.hull_crossing_edges(P, i)
    if not geom.edge_crosses_line(edges[0], i) or edges[0] != lo:
        return Check(False, "bad_endpoints")

    last_y = P.cross_y(lo, i)
    exc_prev = vs[0]
    exc = [vs[1]]
    convex = 0
    closed_at_end = False
    for k in range(1, len(vs) - 1):
        v, w = vs[k], vs[k + 1]
        q = exc[-2] if len(exc) > 1 else exc_prev
        side = P.side(v, i)
        e = seg(v, w)
        if P.side(w, i) == side:
            if w in exc:
                return Check(False, "excursion_vertex_repeat")
            if _convex_turn(q, v, w, side, P):
                convex += 1
            exc.append(w)
            closed_at_end = False
        else:
            y = P.cross_y(e, i)
            if y <= last_y:
                return Check(False, "crossings_not_increasing")
            if _convex_turn(q, v, w, side, P):
                convex += 1
            if convex != 1:
                return Check(False, "not_pseudo_triangle")
            if not _region_empty(P, i, exc, last_y, y):
                return Check(False, "region_not_empty")
            exc_prev, exc, convex, last_y = v, [w], 0, y
            closed_at_end = True
    if not closed_at_end or edges[-1] != hi:
        return Check(False, "bad_endpoints")
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if P.segments_cross(edges[a], edges[b]):
                return Check(False, "edges_cross")
    if not _all_pointed(set(edges), P):
        return Check(False, "not_pointed")
    return Check(True)


# -- signpost edges ------------------------------------------------------

def _supporting_intersection_x(e: Segment, f: Segment,
                               P: PointSet) -> Optional[Fraction]:
    """Sheared x of the intersection of the two supporting lines.

    None for parallel lines; by convention the caller treats that as an
    intersection at infinity on the right.
    """
    (ax, ay), (bx, by) = P.spoint(e[0]), P.spoint(e[1])
    (cx, cy), (dx, dy) = P.spoint(f[0]), P.spoint(f[1])
    r = (bx - ax, by - ay)
    s = (dx - cx, dy - cy)
    denom = r[0] * s[1] - r[1] * s[0]
    if denom == 0:
        return None
    t = Fraction((cx - ax) * s[1] - (cy - ay) * s[0], denom)
    return ax + t * r[0]


def pt_good_edge(S: EdgeSet, e: Segment, i: int, P: PointSet) -> bool:
    """Signpost test for a crossing edge of S.

    Hull edges are always good; otherwise the supporting line of e must
    meet the supporting lines of the crossing edges immediately above and
    below on different sides of l_i.
    """
    if not geom.edge_crosses_line(e, i):
        raise EdgeDoesNotCrossLine(f"edge {e} does not cross l_{i}")
    if e not in S:
        raise PreconditionViolated(f"edge {e} not in the structure")
    hull = P.convex_hull()
    h = len(hull)
    hull_edges = {seg(hull[k], hull[(k + 1) % h]) for k in range(h)}
    if e in hull_edges:
        return True
    crossing = sorted((f for f in S if geom.edge_crosses_line(f, i)),
                      key=lambda f: P.cross_y(f, i))
    pos = crossing.index(e)
    if pos == 0 or pos == len(crossing) - 1:
        raise InternalInvariantViolation(
            "non-hull crossing edge at the extreme of the crossing order")
    c = P.line_x(i)

    def side_of(x: Optional[Fraction]) -> int:
        if x is None:
            return RIGHT  # parallel supporting lines: treat as +infinity
        if x == c:
            raise InternalInvariantViolation(
                "supporting lines meet on a sweep line")
        return RIGHT if x > c else geom.LEFT

    above = side_of(_supporting_intersection_x(e, crossing[pos + 1], P))
    below = side_of(_supporting_intersection_x(e, crossing[pos - 1], P))
    return above != below
