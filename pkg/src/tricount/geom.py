"""Exact integer geometric primitives.

All predicates are exact sign computations on (arbitrarily wide) integers;
there is no floating point anywhere.  Points carry integer coordinates and a
point set is kept in lexicographic (x, then y) order.  The conceptual
vertical sweep lines l_1 .. l_{n-1} are realized through an integer shear
x' = 2*(M*x + y), y' = 2*y with M large enough that the sheared x-order
equals the lexicographic order.  The shear is an orientation-preserving
affine map, so every predicate (orientation, crossing, convexity,
pointedness, point-in-polygon) agrees with the original plane, while each
sweep line becomes an honest vertical line at an *integer* abscissa strictly
between two consecutive sheared points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    CollinearTriple,
    DegenerateCorridor,
    DuplicatePoint,
    PreconditionViolated,
    TooFewPoints,
)

CW = -1
COLLINEAR = 0
CCW = 1

LEFT = -1
RIGHT = 1

Point = tuple[int, int]
Segment = tuple[int, int]  # pair of vertex indices, normalized a < b

# n up to which a PointSet precomputes the O(n^3) triangle-emptiness table.
EMPTINESS_TABLE_THRESHOLD = 64


def seg(a: int, b: int) -> Segment:
    """Normalize an index pair into a Segment (a < b)."""
    if a == b:
        raise ValueError("degenerate segment")
    return (a, b) if a < b else (b, a)


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): CCW, CW or COLLINEAR."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return CCW
    if d < 0:
        return CW
    return COLLINEAR


class PointSet:
    """A validated, lexicographically sorted planar point set.

    Vertex indices are 0-based: index 0 is the leftmost point, index n-1 the
    rightmost.  SweepIndex i in 1..n-1 denotes the line l_i with points
    0..i-1 on its left and i..n-1 on its right.
    """

    __slots__ = ("points", "n", "_sx", "_sy", "_hull", "_empty_table",
                 "_cross_cache", "_crossy_cache")

    def __init__(self, points: Sequence[Point]):
        self.points = tuple((int(x), int(y)) for x, y in points)
        self.n = len(self.points)
        ymax = max((abs(y) for _, y in self.points), default=0)
        m = 2 * ymax + 1
        # doubled sheared coordinates: sweep-line abscissae become integers
        self._sx = tuple(2 * (m * x + y) for x, y in self.points)
        self._sy = tuple(2 * y for _, y in self.points)
        self._hull: Optional[tuple[int, ...]] = None
        self._empty_table: Optional[dict[tuple[int, int, int], bool]] = None
        self._cross_cache: dict[tuple[Segment, Segment], bool] = {}
        self._crossy_cache: dict[tuple[Segment, int], Fraction] = {}

    # -- sheared coordinate access -------------------------------------

    def spoint(self, j: int) -> tuple[int, int]:
        return (self._sx[j], self._sy[j])

    def line_x(self, i: int) -> int:
        """Integer abscissa (sheared) of sweep line l_i, 1 <= i <= n-1."""
        if not 1 <= i <= self.n - 1:
            raise ValueError(f"sweep index {i} out of range 1..{self.n - 1}")
        return (self._sx[i - 1] + self._sx[i]) // 2

    def side(self, j: int, i: int) -> int:
        """Side of point j w.r.t. sweep line l_i."""
        return LEFT if j < i else RIGHT

    def cross_y(self, e: Segment, i: int) -> Fraction:
        """Exact ordinate (sheared) where segment e crosses line l_i."""
        key = (e, i)
        y = self._crossy_cache.get(key)
        if y is None:
            a, b = e
            if not edge_crosses_line(e, i):
                raise PreconditionViolated(f"edge {e} does not cross l_{i}")
            ax, ay = self.spoint(a)
            bx, by = self.spoint(b)
            c = self.line_x(i)
            y = Fraction(ay * (bx - ax) + (c - ax) * (by - ay), bx - ax)
            self._crossy_cache[key] = y
        return y

    # -- basic predicates on vertex indices ------------------------------

    def orient(self, a: int, b: int, c: int) -> int:
        return orientation(self.points[a], self.points[b], self.points[c])

    def segments_cross(self, e: Segment, f: Segment) -> bool:
        key = (e, f) if e <= f else (f, e)
        r = self._cross_cache.get(key)
        if r is None:
            r = segments_cross(e, f, self)
            self._cross_cache[key] = r
        return r

    def triangle_empty(self, a: int, b: int, c: int) -> bool:
        key = tuple(sorted((a, b, c)))
        if self.n <= EMPTINESS_TABLE_THRESHOLD:
            if self._empty_table is None:
                self._empty_table = {}
            r = self._empty_table.get(key)
            if r is None:
                r = _triangle_empty_scan(a, b, c, self)
                self._empty_table[key] = r
            return r
        return _triangle_empty_scan(a, b, c, self)

    def convex_hull(self) -> tuple[int, ...]:
        if self._hull is None:
            self._hull = tuple(convex_hull(self))
        return self._hull

    def interior_count(self) -> int:
        return self.n - len(self.convex_hull())

    def __repr__(self) -> str:  # pragma: no cover
        return f"PointSet(n={self.n}, points={list(self.points)})"


def validate_point_set(raw: Iterable[Point]) -> PointSet:
    """Sort, deduplicate-check and general-position-check a raw point list."""
    pts = sorted((int(x), int(y)) for x, y in raw)
    if len(pts) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(pts)}")
    for k in range(1, len(pts)):
        if pts[k] == pts[k - 1]:
            raise DuplicatePoint(f"duplicate point {pts[k]}")
    n = len(pts)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if orientation(pts[a], pts[b], pts[c]) == COLLINEAR:
                    raise CollinearTriple(
                        f"collinear triple {pts[a]}, {pts[b]}, {pts[c]}")
    return PointSet(pts)


def convex_hull(P: PointSet) -> list[int]:
    """Indices of the hull in CCW order, by Andrew's monotone chain."""
    idx = list(range(P.n))  # already lex sorted
    if P.n == 3:
        return idx if P.orient(0, 1, 2) == CCW else [0, 2, 1]

    def half(indices: Iterable[int]) -> list[int]:
        out: list[int] = []
        for j in indices:
            while len(out) >= 2 and P.orient(out[-2], out[-1], j) != CCW:
                out.pop()
            out.append(j)
        return out

    lower = half(idx)
    upper = half(reversed(idx))
    return lower[:-1] + upper[:-1]


def _triangle_empty_scan(a: int, b: int, c: int, P: PointSet) -> bool:
    o = P.orient(a, b, c)
    for q in range(P.n):
        if q in (a, b, c):
            continue
        if (P.orient(a, b, q) == o and P.orient(b, c, q) == o
                and P.orient(c, a, q) == o):
            return False
    return True


def triangle_empty(a: int, b: int, c: int, P: PointSet) -> bool:
    """True iff no other point of P lies strictly inside triangle abc."""
    return P.triangle_empty(a, b, c)


def segments_cross(s1: Segment, s2: Segment, P: PointSet) -> bool:
    """Proper crossing: intersection in the strict interior of both.

    Sharing an endpoint is never a crossing.  Under general position no
    endpoint can lie in the other segment's interior, so the test reduces to
    strict orientation alternation.
    """
    a, b = s1
    c, d = s2
    if a in s2 or b in s2:
        return False
    o1 = P.orient(a, b, c)
    o2 = P.orient(a, b, d)
    if o1 == o2:
        return False
    o3 = P.orient(c, d, a)
    o4 = P.orient(c, d, b)
    return o3 != o4


def edge_crosses_line(s: Segment, i: int) -> bool:
    """True iff segment s has one endpoint left of l_i and one right."""
    a, b = s
    return a < i <= b if a < b else b < i <= a


def point_in_triangle(q: int, a: int, b: int, c: int, P: PointSet) -> bool:
    o = P.orient(a, b, c)
    return (P.orient(a, b, q) == o and P.orient(b, c, q) == o
            and P.orient(c, a, q) == o)


def wedge_empty(a: int, b: int, d: int, i: int, P: PointSet) -> bool:
    """Emptiness of the wedge of consecutive path edges ba, bd w.r.t. l_i.

    The wedge (apex b) is exactly triangle abd clipped to b's side of l_i,
    because l_i separates {a, d} from b.
    """
    if not edge_crosses_line(seg(a, b), i) or not edge_crosses_line(seg(b, d), i):
        raise PreconditionViolated(
            f"edges {seg(a, b)} and {seg(b, d)} must both cross l_{i}")
    sb = P.side(b, i)
    for q in range(P.n):
        if q in (a, b, d):
            continue
        if P.side(q, i) == sb and point_in_triangle(q, a, b, d, P):
            return False
    return True


def hull_crossing_edges(P: PointSet, i: int) -> tuple[Segment, Segment]:
    """The two hull edges crossed by l_i, ordered by crossing height."""
    hull = P.convex_hull()
    crossing = []
    h = len(hull)
    for k in range(h):
        e = seg(hull[k], hull[(k + 1) % h])
        if edge_crosses_line(e, i):
            crossing.append(e)
    if len(crossing) != 2:
        raise PreconditionViolated(
            f"expected exactly 2 hull edges crossing l_{i}, got {crossing}")
    crossing.sort(key=lambda e: P.cross_y(e, i))
    return crossing[0], crossing[1]


def visible_points(source: int, obstacles: Sequence[Segment],
                   P: PointSet) -> set[int]:
    """Points q whose open segment source-q meets no obstacle interior.

    Obstacles sharing an endpoint with the sight line never block it (a
    shared endpoint is not a proper crossing), and under general position no
    point of P lies on the open segment between two others.
    """
    out = set()
    for q in range(P.n):
        if q == source:
            continue
        sq = seg(source, q)
        if all(not P.segments_cross(sq, ob) for ob in obstacles):
            out.add(q)
    return out


# -- exact rational helpers (sheared coordinates) -----------------------

RPoint = tuple[Fraction, Fraction]


def _orient_r(a, b, c) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def _on_open_segment_r(q, a, b) -> bool:
    if _orient_r(a, b, q) != 0:
        return False
    lo, hi = min(a, b), max(a, b)
    return lo < q < hi


def _segments_cross_r(a, b, c, d) -> bool:
    """Proper crossing of segments ab and cd with rational endpoints."""
    o1 = _orient_r(a, b, c)
    o2 = _orient_r(a, b, d)
    o3 = _orient_r(c, d, a)
    o4 = _orient_r(c, d, b)
    return o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4)


def point_in_polygon_strict(q: RPoint, poly: Sequence[RPoint]) -> bool:
    """Even-odd test with a half-open horizontal ray; q must be off-boundary."""
    inside = False
    m = len(poly)
    qx, qy = q
    for k in range(m):
        ax, ay = poly[k]
        bx, by = poly[(k + 1) % m]
        if (ay > qy) != (by > qy):
            # exact x of the edge at height qy
            xint = Fraction(ax) + Fraction(qy - ay) * (bx - ax) / (by - ay)
            if xint > qx:
                inside = not inside
    return inside


@dataclass(frozen=True)
class Interval:
    """A (possibly empty) interval of ordinates on a sweep line.

    Ordinates live in the doubled-sheared y coordinate (twice the original
    y), so integer points of P have even ordinates.
    """
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    def is_empty(self) -> bool:
        return self.lo is None or self.hi is None or self.lo >= self.hi

    def length(self) -> Fraction:
        if self.is_empty():
            return Fraction(0)
        return self.hi - self.lo


EMPTY_INTERVAL = Interval()


def _blocked_at(P: PointSet, p: int, c: int, y: Fraction,
                obstacles: Sequence[Segment]) -> bool:
    sp = P.spoint(p)
    sp = (Fraction(sp[0]), Fraction(sp[1]))
    q = (Fraction(c), y)
    for (u, v) in obstacles:
        if p in (u, v):
            continue  # an obstacle never blocks along its own endpoints
        su = P.spoint(u)
        sv = P.spoint(v)
        if _segments_cross_r(sp, q, su, sv):
            return True
        # grazing contact: an obstacle endpoint on the open sight segment
        if _on_open_segment_r(su, sp, q) or _on_open_segment_r(sv, sp, q):
            return True
    return False


def visibility_interval(p: int, i: int, obstacles: Sequence[Segment],
                        P: PointSet) -> Interval:
    """Largest sub-interval of l_i (clipped to the hull) visible from p.

    Endpoints are exact rationals in sheared coordinates.  Visibility from a
    point may in general split into several intervals; the longest one is
    returned (lowest wins ties), and an empty Interval when p sees nothing.
    """
    lo_edge, hi_edge = hull_crossing_edges(P, i)
    base_lo = P.cross_y(lo_edge, i)
    base_hi = P.cross_y(hi_edge, i)
    c = P.line_x(i)
    px, py = P.spoint(p)

    cuts = {base_lo, base_hi}
    for (u, v) in obstacles:
        for (ax, ay), (bx, by) in (
                ((px, py), P.spoint(u)),
                ((px, py), P.spoint(v)),
                (P.spoint(u), P.spoint(v))):
            if ax == bx:
                continue  # distinct points never share a sheared abscissa
            y = Fraction(ay * (bx - ax) + (c - ax) * (by - ay), bx - ax)
            if base_lo < y < base_hi:
                cuts.add(y)
    ys = sorted(cuts)

    best = EMPTY_INTERVAL
    run_lo: Optional[Fraction] = None
    for k in range(len(ys) - 1):
        mid = (ys[k] + ys[k + 1]) / 2
        if not _blocked_at(P, p, c, mid, obstacles):
            if run_lo is None:
                run_lo = ys[k]
            if k == len(ys) - 2:
                cand = Interval(run_lo, ys[k + 1])
                if cand.length() > best.length():
                    best = cand
        else:
            if run_lo is not None:
                cand = Interval(run_lo, ys[k])
                if cand.length() > best.length():
                    best = cand
                run_lo = None
    return best


def shortest_homotopic_path(start: int, end: int,
                            sleeve: Sequence[tuple[int, int]],
                            P: PointSet) -> list[int]:
    """Funnel algorithm over a corridor of portals.

    The corridor is given as an ordered sequence of portals, each a
    (left, right) pair of vertex indices as seen walking from start to end;
    it fixes the homotopy class.  The result is the unique shortest path in
    that class, bending only at points of P.
    """
    if start == end:
        raise DegenerateCorridor("corridor loops back to its start")
    pts = P.points
    portals: list[tuple[Point, Point]] = [(pts[start], pts[start])]
    portals += [(pts[l], pts[r]) for (l, r) in sleeve]
    portals.append((pts[end], pts[end]))

    coord_to_idx = {pt: j for j, pt in enumerate(pts)}

    def area2(a: Point, b: Point, c: Point) -> int:
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    path = [pts[start]]
    apex = left = right = pts[start]
    apex_i = left_i = right_i = 0
    k = 1
    guard = 0
    while k < len(portals):
        guard += 1
        if guard > 4 * len(portals) ** 2 + 16:
            raise DegenerateCorridor("corridor self-overlaps inconsistently")
        pl, pr = portals[k]
        # tighten the right side
        if area2(apex, right, pr) >= 0:
            if apex == right or area2(apex, left, pr) < 0:
                right, right_i = pr, k
            else:
                if path[-1] != left:
                    path.append(left)
                apex, apex_i = left, left_i
                left = right = apex
                left_i = right_i = apex_i
                k = apex_i + 1
                continue
        # tighten the left side
        if area2(apex, left, pl) <= 0:
            if apex == left or area2(apex, right, pl) > 0:
                left, left_i = pl, k
            else:
                if path[-1] != right:
                    path.append(right)
                apex, apex_i = right, right_i
                left = right = apex
                left_i = right_i = apex_i
                k = apex_i + 1
                continue
        k += 1
    if path[-1] != pts[end]:
        path.append(pts[end])
    return [coord_to_idx[pt] for pt in path]
