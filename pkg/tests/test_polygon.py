from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import BOWTIE, SQUARE_2, TRIANGLE_111, UNIT_SQUARE, vectors
from lattice_pick.errors import (
    DegenerateArea, DuplicateVertex, NormalMismatch, NotCoplanar, SelfIntersecting, TooFewVertices,
)
from lattice_pick.exact import IntVec3, SurdValue
from lattice_pick.generation import random_simple_polygon
from lattice_pick.plane import Normal, PlaneLattice, kernel_basis, primitive_normal
from lattice_pick.polygon import (
    _vector_area, chart_area, doubled_signed_area, is_simple, lattice_chart, polygon_area, polygon_from_vertices,
    vector_area,
)

SAMPLE_NORMALS = [Normal(1, 0, 0), Normal(1, 1, 1), Normal(2, 3, 5), Normal(0, 1, 2), Normal(1, -2, 2), Normal(3, 0, -4)]

normals = st.sampled_from(SAMPLE_NORMALS)
seeds = st.integers(min_value=0, max_value=2 ** 32)
small_vectors = st.builds(IntVec3, *(st.integers(min_value=-50, max_value=50) for _ in range(3)))


def test_square_in_coordinate_plane(unit_square):
    assert unit_square.normal == Normal(1, 0, 0)
    assert unit_square.offset == 0
    assert unit_square.vertices == tuple(vectors(UNIT_SQUARE))


def test_triangle_in_diagonal_plane(triangle_111):
    assert triangle_111.normal == Normal(1, 1, 1)
    assert triangle_111.offset == 0


def test_affine_offset_is_recorded():
    P = polygon_from_vertices([IntVec3(3, y, z) for y, z in [(0, 0), (1, 0), (1, 1), (0, 1)]])
    assert P.normal == Normal(1, 0, 0)
    assert P.offset == 3


def test_clockwise_input_is_reversed():
    P = polygon_from_vertices(vectors(UNIT_SQUARE[::-1]))
    assert P.vertices == tuple(vectors(UNIT_SQUARE))
    assert vector_area(P) == IntVec3(2, 0, 0)


@pytest.mark.parametrize("points, error", [
    ([(0, 0, 0), (0, 1, 0)], TooFewVertices),
    ([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], NotCoplanar),
    ([(0, 0, 0), (1, 1, 1), (2, 2, 2)], DegenerateArea),
    (BOWTIE, SelfIntersecting),
    ([(0, 0, 0), (0, 1, 0), (0, 1, 0), (0, 0, 1)], DuplicateVertex),
    ([(0, 0, 0), (0, 2, 0), (0, 2, 2), (0, 1, 0), (0, 0, 2)], SelfIntersecting),
])
def test_validation_errors(points, error):
    with pytest.raises(error):
        polygon_from_vertices(vectors(points))


def test_declared_normal():
    P = polygon_from_vertices(vectors(TRIANGLE_111), declared_normal=IntVec3(-2, -2, -2))
    assert P.normal == Normal(1, 1, 1)
    with pytest.raises(NormalMismatch):
        polygon_from_vertices(vectors(TRIANGLE_111), declared_normal=IntVec3(1, 0, 0))


def test_collinear_consecutive_vertices_are_allowed():
    P = polygon_from_vertices(vectors([(0, 0, 0), (0, 1, 0), (0, 2, 0), (0, 2, 2), (0, 0, 2)]))
    assert len(P.vertices) == 5
    assert polygon_area(P) == SurdValue(4, 1)


def test_vector_area_examples(unit_square, triangle_111):
    assert vector_area(unit_square) == IntVec3(2, 0, 0)
    assert vector_area(triangle_111) == IntVec3(1, 1, 1)
    assert _vector_area(list(reversed(unit_square.vertices))) == IntVec3(-2, 0, 0)


def test_polygon_area_examples(unit_square, square_2, triangle_111):
    assert polygon_area(unit_square) == SurdValue(1, 1)
    assert polygon_area(triangle_111) == SurdValue(Fraction(1, 2), 3)
    assert polygon_area(triangle_111).radicand == 3
    assert polygon_area(square_2) == SurdValue(4, 1)


def test_lattice_chart_examples(unit_square, triangle_111):
    L = PlaneLattice(Normal(1, 0, 0), IntVec3(0, 1, 0), IntVec3(0, 0, 1), SurdValue(1, 1))
    assert lattice_chart(unit_square, L).coords == ((0, 0), (1, 0), (1, 1), (0, 1))

    chart = lattice_chart(triangle_111)
    for v, point in zip(triangle_111.vertices, chart.coords):
        assert chart.to_space(point) == v
    assert chart_area(chart.coords) == Fraction(1, 2)
    assert chart.basis.covolume.scale(chart_area(chart.coords)) == polygon_area(triangle_111)


def test_lattice_chart_rejects_basis_of_another_plane(unit_square):
    with pytest.raises(NormalMismatch):
        lattice_chart(unit_square, kernel_basis(Normal(1, 1, 1)))


@pytest.mark.parametrize("coords, expected", [
    ([(0, 0), (1, 0), (1, 1), (0, 1)], True),
    ([(0, 0), (2, 0), (0, 2), (2, 2)], False),
    ([(0, 0), (2, 0), (4, 0)], False),
    ([(0, 0), (4, 0), (4, 4), (2, 0), (0, 4)], False),
    ([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)], True),
    ([(0, 0), (4, 0), (2, 0), (2, 3)], False),
    ([(0, 0), (1, 0), (1, 0), (0, 1)], False),
])
def test_is_simple(coords, expected):
    assert is_simple(coords) is expected


@settings(max_examples=60, deadline=None)
@given(normals, seeds, small_vectors, st.integers(min_value=3, max_value=8))
def test_vector_area_is_translation_invariant(n, seed, shift, vertices):
    P = random_simple_polygon(n, 12, vertices, seed)
    shifted = polygon_from_vertices([v + shift for v in P.vertices])
    assert vector_area(shifted) == vector_area(P)
    assert shifted.normal == P.normal
    assert shifted.offset == P.offset + n.as_vector().dot(shift)


@settings(max_examples=60, deadline=None)
@given(normals, seeds, st.integers(min_value=3, max_value=8), st.integers(-3, 3), st.integers(-3, 3))
def test_area_is_basis_independent(n, seed, vertices, k, m):
    P = random_simple_polygon(n, 12, vertices, seed)
    L = kernel_basis(n)
    # (b1 + k*b2, b2) and (b2, b1 + m*b2) are other certified bases of the same lattice
    for b1, b2 in ((L.b1 + L.b2.scale(k), L.b2), (L.b2, L.b1 + L.b2.scale(m))):
        other = PlaneLattice(n, b1, b2, L.covolume)
        chart = lattice_chart(P, other)
        assert other.covolume.scale(chart_area(chart.coords)) == polygon_area(P)


@settings(max_examples=60, deadline=None)
@given(normals, seeds, st.integers(min_value=3, max_value=8))
def test_reversal_is_normalized_away(n, seed, vertices):
    P = random_simple_polygon(n, 12, vertices, seed)
    assert polygon_from_vertices(list(reversed(P.vertices))) == P
    assert polygon_from_vertices(list(P.vertices)) == P


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(min_value=3, max_value=8))
def test_coordinate_plane_area_is_classical_shoelace(seed, vertices):
    P = random_simple_polygon(Normal(1, 0, 0), 15, vertices, seed)
    area = polygon_area(P)
    assert area.radicand == 1
    projected = [(v.y, v.z) for v in P.vertices]
    assert area.coeff == Fraction(abs(doubled_signed_area(projected)), 2)


def test_primitive_normal_of_vector_area(triangle_111):
    assert primitive_normal(vector_area(triangle_111)) == triangle_111.normal
