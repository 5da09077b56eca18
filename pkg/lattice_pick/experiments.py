"""
Executable checks of the generalized Pick formula.

Both sides of every claimed identity are computed exactly and compared; the
functions here report verdicts, they never assert the formula itself.
"""
import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from lattice_pick.counting import PickCounts, lattice_counts, pick_value
from lattice_pick.errors import DegeneratePickValue, InvalidInput, InvalidR, ZeroConstant
from lattice_pick.exact import IntVec3, SurdValue, det3
from lattice_pick.generation import random_simple_polygon
from lattice_pick.plane import Normal, kernel_basis
from lattice_pick.polygon import LatticePolygon, doubled_area_multiple, polygon_area
from lattice_pick.rng import derive_seed

logger = logging.getLogger(__name__)

WORKED_EXAMPLE_COUNTS = PickCounts(interior=60, boundary=15)
WORKED_EXAMPLE_TEXT_VALUE = 74
REEVE_BASE = (IntVec3(0, 0, 0), IntVec3(1, 0, 0), IntVec3(0, 1, 0))


@dataclass(frozen=True)
class PickReport:
    vertex_count: int
    normal: Normal
    offset: int
    counts: PickCounts
    area_exact: SurdValue
    k_paper: SurdValue
    area_paper_predicted: SurdValue
    k_empirical: SurdValue
    covolume: SurdValue
    paper_match: bool
    covolume_match: bool
    paper_applicable: bool
    paper_ratio: Optional[Fraction]


@dataclass(frozen=True)
class TrialRecord:
    index: int
    vertex_count: int
    t: int
    counts: PickCounts
    k_empirical: SurdValue


@dataclass(frozen=True)
class SurveyRecord:
    normal: Normal
    trials: int
    size_bound: int
    seed: int
    rows: Tuple[TrialRecord, ...]
    all_equal: bool
    common_value: Optional[SurdValue]
    k_paper: SurdValue
    covolume: SurdValue
    paper_applicable: bool
    paper_ratio: Optional[Fraction]
    covolume_match: bool


@dataclass(frozen=True)
class ReeveTetrahedron:
    r: int
    vertices: Tuple[IntVec3, IntVec3, IntVec3, IntVec3]
    total_lattice_points: int
    volume: Fraction
    boundary_points: int = 0
    interior_points: int = 0


@dataclass(frozen=True)
class WorkedExample:
    counts: PickCounts
    pick_value: Fraction
    text_value: Optional[int] = None
    notes: List[str] = field(default_factory=list)


def paper_constant(n: Normal) -> SurdValue:
    """k = (a^3 + ab^2) sqrt(a^2 + b^2 + c^2)."""
    if n.a == 0:
        message = f"k is 0 for normal {n} (a = 0); the area identity is degenerate"
        logger.warning(message)
        warnings.warn(message, ZeroConstant, stacklevel=2)
    return SurdValue(n.a ** 3 + n.a * n.b ** 2, n.norm2())


def theorem_area(P: LatticePolygon, counts: Optional[PickCounts] = None, workers: int = 1) -> SurdValue:
    """k * (I + B/2 - 1) with brute-force counts."""
    if counts is None:
        counts = lattice_counts(P, workers=workers)
    return paper_constant(P.normal).scale(pick_value(counts))


def empirical_constant(P: LatticePolygon, counts: Optional[PickCounts] = None, workers: int = 1) -> SurdValue:
    """The k that makes area = k * (I + B/2 - 1) hold for P."""
    if counts is None:
        counts = lattice_counts(P, workers=workers)
    value = pick_value(counts)
    if value == 0:
        raise DegeneratePickValue(f"I + B/2 - 1 is 0 for counts {counts}")
    return polygon_area(P).scale(1 / value)


def pick_report(P: LatticePolygon, workers: int = 1) -> PickReport:
    counts = lattice_counts(P, workers=workers)
    covolume = kernel_basis(P.normal).covolume
    area = polygon_area(P)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', ZeroConstant)
        k_paper = paper_constant(P.normal)
        predicted = theorem_area(P, counts)
    k_empirical = empirical_constant(P, counts)
    applicable = P.normal.a != 0
    return PickReport(
        vertex_count=len(P.vertices),
        normal=P.normal,
        offset=P.offset,
        counts=counts,
        area_exact=area,
        k_paper=k_paper,
        area_paper_predicted=predicted,
        k_empirical=k_empirical,
        covolume=covolume,
        paper_match=predicted == area,
        covolume_match=k_empirical == covolume,
        paper_applicable=applicable,
        paper_ratio=k_paper.ratio(k_empirical) if applicable else None,
    )


def corollary_holds(P: LatticePolygon, counts: Optional[PickCounts] = None) -> bool:
    """For the coordinate plane x = 0: area = I + B/2 - 1 = k(I + B/2 - 1), exactly."""
    if P.normal != Normal(1, 0, 0):
        return False
    if counts is None:
        counts = lattice_counts(P)
    area = polygon_area(P)
    return area == SurdValue(pick_value(counts), 1) == theorem_area(P, counts)


def survey_vertex_target(vertices: int, index: int, size_bound: int) -> int:
    return min(vertices + index % 4, (size_bound + 1) ** 2)


def _run_trial(job: Tuple[Normal, int, int, int, int]) -> TrialRecord:
    n, index, size_bound, vertices, seed = job
    P = random_simple_polygon(n, size_bound, survey_vertex_target(vertices, index, size_bound),
                              derive_seed(seed, index))
    counts = lattice_counts(P)
    return TrialRecord(
        index=index,
        vertex_count=len(P.vertices),
        t=doubled_area_multiple(P),
        counts=counts,
        k_empirical=empirical_constant(P, counts),
    )


def constant_survey(n: Normal, trials: int, size_bound: int, seed: int,
                    vertices: int = 3, workers: int = 1) -> SurveyRecord:
    """Measure the empirical constant over `trials` random polygons of plane n.

    Trial i uses its own seed derived from (seed, i), so rows do not depend on
    the number of workers.
    """
    if trials < 1:
        raise InvalidInput(f"trials must be positive, got {trials}")
    jobs = [(n, i, size_bound, vertices, seed) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = tuple(executor.map(_run_trial, jobs))
    else:
        rows = tuple(_run_trial(job) for job in jobs)

    constants = {row.k_empirical for row in rows}
    all_equal = len(constants) == 1
    common = rows[0].k_empirical if all_equal else None
    covolume = kernel_basis(n).covolume

    applicable = n.a != 0
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', ZeroConstant)
        k_paper = paper_constant(n)
    if not applicable:
        logger.info("normal %s has a = 0; constant k columns are inapplicable", n)

    logger.debug("survey of %s: %d trials, constants %s", n, trials, sorted(str(c) for c in constants))
    return SurveyRecord(
        normal=n,
        trials=trials,
        size_bound=size_bound,
        seed=seed,
        rows=rows,
        all_equal=all_equal,
        common_value=common,
        k_paper=k_paper,
        covolume=covolume,
        paper_applicable=applicable,
        paper_ratio=k_paper.ratio(common) if applicable and common is not None else None,
        covolume_match=all_equal and common == covolume,
    )


def _in_tetrahedron(vertices: Tuple[IntVec3, ...], point: IntVec3) -> bool:
    """Closed half-space test against each face, oriented by the opposite vertex."""
    for i in range(4):
        a, b, c = (vertices[j] for j in range(4) if j != i)
        side = det3(b - a, c - a, point - a)
        opposite = det3(b - a, c - a, vertices[i] - a)
        if side * opposite < 0:
            return False
    return True


def _on_tetrahedron_boundary(vertices: Tuple[IntVec3, ...], point: IntVec3) -> bool:
    for i in range(4):
        a, b, c = (vertices[j] for j in range(4) if j != i)
        if det3(b - a, c - a, point - a) == 0:
            return True
    return False


def reeve_report(r: int) -> ReeveTetrahedron:
    if r < 1:
        raise InvalidR(f"r must be a positive integer, got {r}")
    vertices = REEVE_BASE + (IntVec3(1, 1, r),)

    total = boundary = 0
    for x in range(2):
        for y in range(2):
            for z in range(r + 1):
                point = IntVec3(x, y, z)
                if _in_tetrahedron(vertices, point):
                    total += 1
                    boundary += _on_tetrahedron_boundary(vertices, point)

    origin = vertices[0]
    volume = Fraction(abs(det3(vertices[1] - origin, vertices[2] - origin, vertices[3] - origin)), 6)
    return ReeveTetrahedron(
        r=r,
        vertices=vertices,
        total_lattice_points=total,
        volume=volume,
        boundary_points=boundary,
        interior_points=total - boundary,
    )


def worked_example(interior: int, boundary: int) -> WorkedExample:
    counts = PickCounts(interior=interior, boundary=boundary)
    value = pick_value(counts)
    if counts != WORKED_EXAMPLE_COUNTS:
        return WorkedExample(counts=counts, pick_value=value)
    return WorkedExample(
        counts=counts,
        pick_value=value,
        text_value=WORKED_EXAMPLE_TEXT_VALUE,
        notes=[
            f"the published evaluation {interior} + {boundary} - 1 = {WORKED_EXAMPLE_TEXT_VALUE} uses B instead of B/2",
            f"I + B/2 - 1 gives {value}; the original drawing is unavailable, so neither value is preferred",
        ],
    )
