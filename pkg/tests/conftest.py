import json
from itertools import product

import pytest

from lattice_pick import flags
from lattice_pick.exact import IntVec3, gcd3
from lattice_pick.plane import Normal
from lattice_pick.polygon import polygon_from_vertices

UNIT_SQUARE = [(0, 0, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1)]
SQUARE_2 = [(0, 0, 0), (0, 2, 0), (0, 2, 2), (0, 0, 2)]
TRIANGLE_111 = [(0, 0, 0), (1, -1, 0), (0, 1, -1)]
BOWTIE = [(0, 0, 0), (0, 2, 0), (0, 0, 2), (0, 2, 2)]


def primitive_normals(bound, a_min=None):
    """Canonical primitive normals with every |component| <= bound."""
    normals = []
    for a, b, c in product(range(-bound, bound + 1), repeat=3):
        if (a, b, c) == (0, 0, 0) or gcd3(a, b, c) != 1:
            continue
        if next(v for v in (a, b, c) if v != 0) < 0:
            continue
        if a_min is not None and a < a_min:
            continue
        normals.append(Normal(a, b, c))
    return normals


def vectors(points):
    return [IntVec3.of(p) for p in points]


def write_polygon(path, vertices, normal=None):
    document = {"format_version": 1, "vertices": [list(v) for v in vertices]}
    if normal is not None:
        document["normal"] = list(normal)
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


@pytest.fixture(autouse=True)
def isolated_config_dir(tmp_path, monkeypatch):
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    monkeypatch.setattr(flags, "LATTICE_PICK_CONFIG_DIR", str(config_dir))
    return config_dir


@pytest.fixture
def unit_square():
    return polygon_from_vertices(vectors(UNIT_SQUARE))


@pytest.fixture
def square_2():
    return polygon_from_vertices(vectors(SQUARE_2))


@pytest.fixture
def triangle_111():
    return polygon_from_vertices(vectors(TRIANGLE_111))
