"""
Lattice point counts of a polygon, taken over Z^3.

Counting is done in chart coordinates of a certified plane basis. The chart is a
bijection between lattice points of the plane and integer pairs, so every count
here equals the corresponding count in Z^3.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from lattice_pick.errors import DegenerateSegment, InternalInconsistency
from lattice_pick.exact import IntVec3, gcd3
from lattice_pick.plane import PlaneLattice
from lattice_pick.polygon import LatticePolygon, Point2, chart_area, lattice_chart, on_segment

logger = logging.getLogger(__name__)


class PointLocation(Enum):
    INSIDE = 'inside'
    BOUNDARY = 'boundary'
    OUTSIDE = 'outside'


@dataclass(frozen=True)
class PickCounts:
    interior: int
    boundary: int


def segment_interior_count(p: IntVec3, q: IntVec3) -> int:
    if p == q:
        raise DegenerateSegment(f"segment endpoints coincide at {p}")
    d = q - p
    return gcd3(d.x, d.y, d.z) - 1


def boundary_count(P: LatticePolygon) -> int:
    return sum(segment_interior_count(p, q) + 1 for p, q in P.edges())


def point_classify(coords: Sequence[Point2], pt: Point2) -> PointLocation:
    """Exact point-in-polygon test by winding number."""
    px, py = pt
    winding = 0
    count = len(coords)
    for i in range(count):
        a, b = coords[i], coords[(i + 1) % count]
        if on_segment(a, b, pt):
            return PointLocation.BOUNDARY
        side = (b[0] - a[0]) * (py - a[1]) - (px - a[0]) * (b[1] - a[1])
        if a[1] <= py < b[1] and side > 0:
            winding += 1
        elif b[1] <= py < a[1] and side < 0:
            winding -= 1
    return PointLocation.INSIDE if winding != 0 else PointLocation.OUTSIDE


def _bounding_box(coords: Sequence[Point2]) -> Tuple[int, int, int, int]:
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    return min(xs), max(xs), min(ys), max(ys)


def _count_rows(job: Tuple[Tuple[Point2, ...], int, int, int, int]) -> int:
    coords, x_lo, x_hi, y_lo, y_hi = job
    return sum(
        1
        for y in range(y_lo, y_hi + 1)
        for x in range(x_lo, x_hi + 1)
        if point_classify(coords, (x, y)) is PointLocation.INSIDE
    )


def _row_jobs(coords: Tuple[Point2, ...], chunks: int) -> List[Tuple]:
    x_lo, x_hi, y_lo, y_hi = _bounding_box(coords)
    rows = y_hi - y_lo + 1
    step = max(1, -(-rows // chunks))
    return [
        (coords, x_lo, x_hi, start, min(start + step - 1, y_hi))
        for start in range(y_lo, y_hi + 1, step)
    ]


def interior_count_bruteforce(P: LatticePolygon, L: Optional[PlaneLattice] = None,
                              workers: int = 1) -> int:
    """Classify every point of the chart bounding box.

    Rows are split into `workers` contiguous chunks; the sum is independent of the split.
    """
    coords = lattice_chart(P, L).coords
    jobs = _row_jobs(coords, max(1, workers))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return sum(executor.map(_count_rows, jobs))
    return sum(_count_rows(job) for job in jobs)


def interior_count_fast(P: LatticePolygon, L: Optional[PlaneLattice] = None) -> int:
    """I = A_lat - B/2 + 1, classical Pick applied in chart coordinates."""
    area = chart_area(lattice_chart(P, L).coords)
    interior = area - Fraction(boundary_count(P), 2) + 1
    if interior.denominator != 1 or interior < 0:
        raise InternalInconsistency(f"Pick inversion gave {interior} interior points")
    return int(interior)


def lattice_counts(P: LatticePolygon, L: Optional[PlaneLattice] = None, workers: int = 1) -> PickCounts:
    """Oracle counts: brute-force interior, gcd boundary."""
    return PickCounts(interior=interior_count_bruteforce(P, L, workers), boundary=boundary_count(P))


def classify_chart_points(coords: Sequence[Point2]) -> Tuple[List[Point2], List[Point2]]:
    """All boundary and interior integer points of the chart polygon, in row order."""
    x_lo, x_hi, y_lo, y_hi = _bounding_box(coords)
    boundary, interior = [], []
    for y in range(y_lo, y_hi + 1):
        for x in range(x_lo, x_hi + 1):
            location = point_classify(coords, (x, y))
            if location is PointLocation.BOUNDARY:
                boundary.append((x, y))
            elif location is PointLocation.INSIDE:
                interior.append((x, y))
    return boundary, interior


def pick_value(counts: PickCounts) -> Fraction:
    return counts.interior + Fraction(counts.boundary, 2) - 1
