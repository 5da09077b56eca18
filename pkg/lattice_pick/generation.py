"""
Seeded random simple lattice polygons in a given plane.

Chart points are sampled in [0, size_bound]^2, their convex hull gives a simple
starting polygon, and extra vertices are inserted one at a time, each insertion
kept only if the polygon is still simple.
"""
import logging
from typing import List, Sequence

from lattice_pick.errors import GenerationFailed, InvalidInput, TooFewVertices
from lattice_pick.plane import Normal, kernel_basis
from lattice_pick.polygon import LatticePolygon, Point2, is_simple, orientation, polygon_from_vertices
from lattice_pick.rng import SplitMix64

logger = logging.getLogger(__name__)

MAX_ROUNDS = 32
INSERT_ATTEMPTS_PER_VERTEX = 64


def convex_hull(points: Sequence[Point2]) -> List[Point2]:
    """Strict convex hull, counterclockwise, collinear points dropped (monotone chain)."""
    points = sorted(set(points))
    if len(points) < 3:
        return list(points)

    lower: List[Point2] = []
    for p in points:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper: List[Point2] = []
    for p in reversed(points):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return lower[:-1] + upper[:-1]


def _sample_points(rng: SplitMix64, count: int, size_bound: int) -> List[Point2]:
    points = set()
    while len(points) < count:
        points.add((rng.randint(0, size_bound), rng.randint(0, size_bound)))
    return sorted(points)


def _choose_subset(rng: SplitMix64, hull: List[Point2], count: int) -> List[Point2]:
    indices = list(range(len(hull)))
    for i in range(count):
        j = i + rng.below(len(indices) - i)
        indices[i], indices[j] = indices[j], indices[i]
    return [hull[i] for i in sorted(indices[:count])]


def _grow(rng: SplitMix64, coords: List[Point2], target: int, size_bound: int) -> List[Point2]:
    attempts = INSERT_ATTEMPTS_PER_VERTEX * target
    while len(coords) < target and attempts > 0:
        attempts -= 1
        point = (rng.randint(0, size_bound), rng.randint(0, size_bound))
        if point in coords:
            continue
        i = rng.below(len(coords))
        candidate = coords[:i + 1] + [point] + coords[i + 1:]
        if is_simple(candidate):
            coords = candidate
    return coords


def random_simple_polygon(n: Normal, size_bound: int, target_vertices: int, seed: int) -> LatticePolygon:
    if target_vertices < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {target_vertices}")
    if size_bound < 1:
        raise InvalidInput(f"size bound must be positive, got {size_bound}")

    capacity = (size_bound + 1) ** 2
    if target_vertices > capacity:
        raise GenerationFailed(
            f"{target_vertices} vertices cannot fit in a {size_bound + 1}x{size_bound + 1} chart grid"
        )

    L = kernel_basis(n)
    rng = SplitMix64(seed)
    for round_number in range(MAX_ROUNDS):
        sample_size = min(capacity, target_vertices + 3 + rng.below(target_vertices + 1))
        hull = convex_hull(_sample_points(rng, sample_size, size_bound))
        if len(hull) < 3:
            continue
        if len(hull) > target_vertices:
            hull = _choose_subset(rng, hull, target_vertices)

        coords = _grow(rng, hull, target_vertices, size_bound)
        if len(coords) != target_vertices:
            logger.debug("round %d reached %d of %d vertices", round_number, len(coords), target_vertices)
            continue

        vertices = [L.b1.scale(u) + L.b2.scale(w) for u, w in coords]
        return polygon_from_vertices(vertices, declared_normal=n.as_vector())

    raise GenerationFailed(
        f"no simple {target_vertices}-gon found in {MAX_ROUNDS} rounds with size bound {size_bound}"
    )
