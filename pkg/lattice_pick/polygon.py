"""
Simple lattice polygons lying in one rational plane of Z^3.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from lattice_pick.errors import (
    DegenerateArea, DuplicateVertex, NormalMismatch, NotCoplanar, SelfIntersecting, TooFewVertices,
)
from lattice_pick.exact import ZERO, IntVec3, SurdValue, cross, integer_multiple
from lattice_pick.plane import Normal, PlaneLattice, kernel_basis, lattice_coordinates, primitive_normal

logger = logging.getLogger(__name__)

Point2 = Tuple[int, int]


@dataclass(frozen=True)
class LatticePolygon:
    vertices: Tuple[IntVec3, ...]
    normal: Normal
    offset: int

    def edges(self):
        count = len(self.vertices)
        for i in range(count):
            yield self.vertices[i], self.vertices[(i + 1) % count]


@dataclass(frozen=True)
class Chart2D:
    origin: IntVec3
    basis: PlaneLattice
    coords: Tuple[Point2, ...]

    def to_space(self, point: Point2) -> IntVec3:
        u, w = point
        return self.origin + self.basis.b1.scale(u) + self.basis.b2.scale(w)


def orientation(p: Point2, q: Point2, r: Point2) -> int:
    """Sign of the 2x2 determinant (q - p, r - p): 1 left turn, -1 right turn, 0 collinear."""
    det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (det > 0) - (det < 0)


def on_segment(p: Point2, q: Point2, r: Point2) -> bool:
    """True iff r lies on the closed segment pq."""
    return (
        orientation(p, q, r) == 0
        and min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
        and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
    )


def segments_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool:
    d1 = orientation(q1, q2, p1)
    d2 = orientation(q1, q2, p2)
    d3 = orientation(p1, p2, q1)
    d4 = orientation(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        on_segment(q1, q2, p1) or on_segment(q1, q2, p2)
        or on_segment(p1, p2, q1) or on_segment(p1, p2, q2)
    )


def doubled_signed_area(coords: Sequence[Point2]) -> int:
    count = len(coords)
    return sum(
        coords[i][0] * coords[(i + 1) % count][1] - coords[(i + 1) % count][0] * coords[i][1]
        for i in range(count)
    )


def is_simple(coords: Sequence[Point2]) -> bool:
    count = len(coords)
    if count < 3 or doubled_signed_area(coords) == 0:
        return False
    edges = [(coords[i], coords[(i + 1) % count]) for i in range(count)]
    if any(p == q for p, q in edges):
        return False

    for i in range(count):
        p, q = edges[i]
        for j in range(i + 1, count):
            r, s = edges[j]
            if j == i + 1:
                # shared vertex q == r; the edges must not fold back onto each other
                if orientation(p, q, s) == 0 and (on_segment(p, q, s) or on_segment(q, s, p)):
                    return False
            elif i == 0 and j == count - 1:
                # shared vertex p == s
                if orientation(r, s, q) == 0 and (on_segment(r, s, q) or on_segment(p, q, r)):
                    return False
            elif segments_intersect(p, q, r, s):
                return False
    return True


def _vector_area(vertices: Sequence[IntVec3]) -> IntVec3:
    total = ZERO
    count = len(vertices)
    for i in range(count):
        total = total + cross(vertices[i], vertices[(i + 1) % count])
    return total


def _derive_normal(vertices: Sequence[IntVec3]) -> Normal:
    doubled = _vector_area(vertices)
    if not doubled.is_zero():
        return primitive_normal(doubled)
    origin = vertices[0]
    for i in range(1, len(vertices)):
        for j in range(i + 1, len(vertices)):
            product = cross(vertices[i] - origin, vertices[j] - origin)
            if not product.is_zero():
                return primitive_normal(product)
    raise DegenerateArea("all vertices are collinear")


def _chart_coords(vertices: Sequence[IntVec3], L: PlaneLattice) -> Tuple[Point2, ...]:
    origin = vertices[0]
    return tuple(lattice_coordinates(L, v - origin) for v in vertices)


def _canonical_order(vertices: List[IntVec3]) -> Tuple[IntVec3, ...]:
    start = min(range(len(vertices)), key=lambda i: vertices[i].as_tuple())
    return tuple(vertices[start:] + vertices[:start])


def polygon_from_vertices(vertices: Sequence[IntVec3],
                          declared_normal: Optional[IntVec3] = None) -> LatticePolygon:
    """Validate a closed vertex loop and normalize it.

    The stored loop runs counterclockwise seen from the +normal side and starts at
    its lexicographically smallest vertex.
    """
    vertices = [IntVec3.of(v) for v in vertices]
    if len(vertices) < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {len(vertices)}")
    for i, v in enumerate(vertices):
        if v == vertices[(i + 1) % len(vertices)]:
            raise DuplicateVertex(f"vertex {i} {v} repeats its successor")

    normal = _derive_normal(vertices)
    offset = normal.as_vector().dot(vertices[0])
    for i, v in enumerate(vertices):
        if normal.as_vector().dot(v) != offset:
            raise NotCoplanar(f"vertex {i} {v} is off the plane {normal}.x = {offset}")

    if declared_normal is not None:
        declared = primitive_normal(IntVec3.of(declared_normal))
        if declared != normal:
            raise NormalMismatch(f"declared normal {declared} is not parallel to derived normal {normal}")

    L = kernel_basis(normal)
    if not is_simple(_chart_coords(vertices, L)):
        raise SelfIntersecting("the closed polyline intersects itself")

    t = integer_multiple(_vector_area(vertices), normal.as_vector())
    if t is None or t == 0:
        raise DegenerateArea("the polygon encloses no area")
    if t < 0:
        vertices = vertices[::-1]
        logger.debug("reversed vertex order to orient counterclockwise around %s", normal)

    return LatticePolygon(vertices=_canonical_order(vertices), normal=normal, offset=offset)


def vector_area(P: LatticePolygon) -> IntVec3:
    """S2 = sum of cross(v_i, v_i+1); twice the area times the unit normal."""
    return _vector_area(P.vertices)


def doubled_area_multiple(P: LatticePolygon) -> int:
    """The integer t with vector_area(P) = t * normal."""
    return integer_multiple(vector_area(P), P.normal.as_vector())


def polygon_area(P: LatticePolygon) -> SurdValue:
    return SurdValue(Fraction(doubled_area_multiple(P), 2), P.normal.norm2())


def lattice_chart(P: LatticePolygon, L: Optional[PlaneLattice] = None) -> Chart2D:
    if L is None:
        L = kernel_basis(P.normal)
    elif L.normal != P.normal:
        raise NormalMismatch(f"basis normal {L.normal} differs from polygon normal {P.normal}")
    return Chart2D(origin=P.vertices[0], basis=L, coords=_chart_coords(P.vertices, L))


def chart_area(coords: Sequence[Point2]) -> Fraction:
    """Shoelace area of chart coordinates (a half-integer)."""
    return Fraction(abs(doubled_signed_area(coords)), 2)
