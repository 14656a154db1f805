"""Convex quadrilaterals: validation, classification flags, the canonical
(s, t) form, diagonal midpoints, and parallelogram frames.

The canonical form places one vertex at the origin, its two neighbors at
(1, 0) and (0, 1), and the opposite vertex at (s, t) with s + t > 1 and
s != 1 != t. Every convex non-trapezoid admits such a form; trapezoids are
refused because one of s, t degenerates to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CanonicalFormViolated,
    DegenerateVertices,
    IsTrapezoid,
    NotConvex,
    NotParallelogram,
)
from .geom import AffineMap, Line, Point, cross2, distance, dot2, midpoint, sub2

# Opposite sides count as parallel when their cross product is below this
# multiple of the product of their lengths.
PARALLEL_RTOL = 1e-10

# Pitot test tolerance for the tangential flag, relative to the perimeter.
PITOT_RTOL = 1e-9

_COINCIDENT_RTOL = 1e-12
_COLLINEAR_RTOL = 1e-12


@dataclass(frozen=True)
class ConvexQuad:
    """A strictly convex quadrilateral.

    Vertices are ordered counterclockwise starting from the lexicographically
    smallest, exactly as produced by validate().
    """

    vertices: tuple[Point, Point, Point, Point]
    is_parallelogram: bool
    is_trapezoid: bool
    is_tangential: bool

    def side_vectors(self) -> tuple[Point, Point, Point, Point]:
        v = self.vertices
        return tuple(sub2(v[(i + 1) % 4], v[i]) for i in range(4))

    def sides(self) -> tuple[Line, Line, Line, Line]:
        """Side lines in vertex order; normals point into the quad."""
        v = self.vertices
        return tuple(Line.through(v[i], v[(i + 1) % 4]) for i in range(4))

    def perimeter(self) -> float:
        v = self.vertices
        return sum(distance(v[i], v[(i + 1) % 4]) for i in range(4))

    def diameter(self) -> float:
        v = self.vertices
        return max(distance(v[i], v[j]) for i in range(4) for j in range(i + 1, 4))


@dataclass(frozen=True)
class NormalizedQuad:
    """Canonical (s, t) form together with the maps between frames.

    to_canonical sends the anchored quad onto (0,0), (1,0), (s,t), (0,1);
    from_canonical is its inverse.
    """

    s: float
    t: float
    to_canonical: AffineMap
    from_canonical: AffineMap


@dataclass(frozen=True)
class ParallelogramFrame:
    """Parallelogram with vertices (0,0), (l,0), (d+l,k), (d,k), l,k > 0,
    d >= 0, plus the rigid placement mapping the frame onto the input."""

    l: float
    k: float
    d: float
    placement: AffineMap

    def corners(self) -> tuple[Point, Point, Point, Point]:
        """Frame vertices in counterclockwise order from the origin."""
        return ((0.0, 0.0), (self.l, 0.0), (self.d + self.l, self.k), (self.d, self.k))

    def placed_corners(self) -> tuple[Point, Point, Point, Point]:
        return tuple(self.placement(p) for p in self.corners())


def _parallel(u: Point, v: Point) -> bool:
    lu = math.hypot(*u)
    lv = math.hypot(*v)
    return abs(cross2(u, v)) < PARALLEL_RTOL * lu * lv


def validate(points) -> ConvexQuad:
    """Check four points for strict convexity and orient them.

    Vertices are reordered counterclockwise (angular sort about the
    centroid) starting from the lexicographically smallest. Coincident or
    collinear triples raise DegenerateVertices; a point set that is not in
    convex position raises NotConvex.
    """
    pts = [(float(p[0]), float(p[1])) for p in points]
    if len(pts) != 4:
        raise DegenerateVertices(f"exactly four vertices required, got {len(pts)}")
    if not all(math.isfinite(x) and math.isfinite(y) for x, y in pts):
        raise DegenerateVertices("vertices must be finite")
    diam = max(distance(pts[i], pts[j]) for i in range(4) for j in range(i + 1, 4))
    if diam == 0.0:
        raise DegenerateVertices("all vertices coincide")
    for i in range(4):
        for j in range(i + 1, 4):
            if distance(pts[i], pts[j]) < _COINCIDENT_RTOL * diam:
                raise DegenerateVertices(f"vertices {i} and {j} coincide")
    cx = sum(x for x, _ in pts) / 4.0
    cy = sum(y for _, y in pts) / 4.0
    pts.sort(key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
    start = min(range(4), key=lambda i: pts[i])
    pts = pts[start:] + pts[:start]
    edges = [sub2(pts[(i + 1) % 4], pts[i]) for i in range(4)]
    for i in range(4):
        u, w = edges[i], edges[(i + 1) % 4]
        z = cross2(u, w)
        if abs(z) <= _COLLINEAR_RTOL * math.hypot(*u) * math.hypot(*w):
            raise DegenerateVertices("three vertices are collinear")
        if z < 0.0:
            raise NotConvex("vertices are not in convex position")
    para02 = _parallel(edges[0], edges[2])
    para13 = _parallel(edges[1], edges[3])
    lengths = [math.hypot(*e) for e in edges]
    pitot = abs((lengths[0] + lengths[2]) - (lengths[1] + lengths[3]))
    return ConvexQuad(
        vertices=tuple(pts),
        is_parallelogram=para02 and para13,
        is_trapezoid=para02 or para13,
        is_tangential=pitot < PITOT_RTOL * sum(lengths),
    )


def quad_area(q: ConvexQuad) -> float:
    """Shoelace area; positive for the counterclockwise vertex order."""
    v = q.vertices
    acc = 0.0
    for i in range(4):
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % 4]
        acc += x0 * y1 - x1 * y0
    return 0.5 * acc


def diagonal_midpoints(q: ConvexQuad) -> tuple[Point, Point]:
    """Midpoints (M1, M2) of the two diagonals.

    M1 belongs to the diagonal joining the second and fourth vertices of the
    counterclockwise order, M2 to the one through the first vertex. In the
    canonical frame this makes M1 = (1/2, 1/2) and M2 = (s/2, t/2).
    """
    v = q.vertices
    return (midpoint(v[1], v[3]), midpoint(v[0], v[2]))


def _anchor_index(q: ConvexQuad) -> int:
    """Vertex whose interior angle is closest to a right angle.

    The canonical frame has a right angle at the origin, so anchoring at the
    most nearly right-angled vertex makes canonical inputs round-trip
    exactly. Minimizing |cos| needs no arccos; ties go to the earliest
    counterclockwise index.
    """
    v = q.vertices
    best, best_val = 0, math.inf
    for i in range(4):
        u = sub2(v[(i + 1) % 4], v[i])
        w = sub2(v[(i + 3) % 4], v[i])
        val = abs(dot2(u, w)) / (math.hypot(*u) * math.hypot(*w))
        if val < best_val:
            best, best_val = i, val
    return best


def normalize(q: ConvexQuad) -> NormalizedQuad:
    """Affinely map a convex non-trapezoid onto its canonical (s, t) form.

    The anchor vertex goes to the origin, its counterclockwise successor to
    (1, 0), its predecessor to (0, 1), and the opposite vertex to (s, t).
    Trapezoids (including parallelograms) are refused.
    """
    if q.is_trapezoid or q.is_parallelogram:
        raise IsTrapezoid(
            "canonical (s, t) form requires a non-trapezoid; parallelograms "
            "use parallelogram_frame instead"
        )
    i = _anchor_index(q)
    v = q.vertices
    anchor = v[i]
    e1 = sub2(v[(i + 1) % 4], anchor)
    e2 = sub2(v[(i + 3) % 4], anchor)
    from_canonical = AffineMap(e1[0], e2[0], e1[1], e2[1], anchor[0], anchor[1])
    to_canonical = from_canonical.inverse()
    s, t = to_canonical(v[(i + 2) % 4])
    if not (s > 0.0 and t > 0.0 and s + t > 1.0) or s == 1.0 or t == 1.0:
        raise CanonicalFormViolated(
            f"canonical pair (s, t) = ({s}, {t}) violates s, t > 0, s + t > 1, s != 1 != t"
        )
    return NormalizedQuad(s=s, t=t, to_canonical=to_canonical, from_canonical=from_canonical)


def parallelogram_frame(q: ConvexQuad) -> ParallelogramFrame:
    """Extract (l, k, d) and the rigid placement of a parallelogram.

    The base side is chosen so the shear d is nonnegative; the placement is
    a rotation plus translation (determinant +1) taking the frame corners
    onto the input vertices.
    """
    if not q.is_parallelogram:
        raise NotParallelogram("parallelogram_frame requires both opposite side pairs parallel")
    v = q.vertices
    for base in (0, 1):
        a = v[base]
        u = sub2(v[(base + 1) % 4], a)
        w = sub2(v[(base + 3) % 4], a)
        l = math.hypot(*u)
        theta = math.atan2(u[1], u[0])
        ct, st = math.cos(theta), math.sin(theta)
        d = ct * w[0] + st * w[1]
        k = -st * w[0] + ct * w[1]
        if abs(d) <= 1e-12 * l:
            d = 0.0
        if d >= 0.0:
            placement = AffineMap(ct, -st, st, ct, a[0], a[1])
            return ParallelogramFrame(l=l, k=k, d=d, placement=placement)
    raise NotParallelogram("no base side yields a nonnegative shear")  # pragma: no cover
