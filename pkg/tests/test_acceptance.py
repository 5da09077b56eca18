"""End-to-end reproduction runs over seeded polygon families."""
from fractions import Fraction

import pytest

from conftest import primitive_normals
from lattice_pick.counting import interior_count_bruteforce, interior_count_fast, lattice_counts, pick_value
from lattice_pick.exact import SurdValue
from lattice_pick.experiments import (
    constant_survey, corollary_holds, pick_report, reeve_report, theorem_area, worked_example,
)
from lattice_pick.generation import random_simple_polygon
from lattice_pick.plane import Normal, kernel_basis
from lattice_pick.polygon import polygon_area
from lattice_pick.rng import derive_seed


def test_coordinate_plane_area_equals_pick_value():
    n = Normal(1, 0, 0)
    for i in range(200):
        P = random_simple_polygon(n, 50, 3 + i % 8, derive_seed(2024, i))
        counts = lattice_counts(P)
        assert polygon_area(P) == SurdValue(pick_value(counts), 1) == theorem_area(P, counts)
        assert corollary_holds(P, counts)


def test_fast_count_matches_bruteforce_across_planes():
    normals = primitive_normals(5)[::23]
    assert len(normals) >= 20
    for i in range(500):
        n = normals[i % len(normals)]
        P = random_simple_polygon(n, 30, 3 + i % 7, derive_seed(7, i))
        L = kernel_basis(n)
        assert interior_count_fast(P, L) == interior_count_bruteforce(P, L)


@pytest.mark.parametrize("n", primitive_normals(4, a_min=1), ids=str)
def test_empirical_constant_is_covolume(n):
    record = constant_survey(n, trials=30, size_bound=10, seed=1, vertices=4)
    assert record.all_equal
    assert record.common_value == kernel_basis(n).covolume
    assert record.paper_ratio == n.a * (n.a ** 2 + n.b ** 2)

    sample = random_simple_polygon(n, 10, 5, 0)
    report = pick_report(sample)
    assert report.paper_match == (n.a * (n.a ** 2 + n.b ** 2) == 1)


def test_reeve_tetrahedra_share_point_count():
    tetrahedra = [reeve_report(r) for r in range(1, 11)]
    assert {t.total_lattice_points for t in tetrahedra} == {4}
    assert [t.volume for t in tetrahedra] == [Fraction(r, 6) for r in range(1, 11)]


def test_worked_example_values():
    example = worked_example(60, 15)
    assert example.pick_value == Fraction(133, 2)
    assert example.text_value == 74
