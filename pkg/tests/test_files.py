import csv
import io
import json

import pytest

from conftest import TRIANGLE_111, vectors, write_polygon
from lattice_pick import __version__
from lattice_pick.errors import PolygonFileError
from lattice_pick.exact import IntVec3
from lattice_pick.experiments import constant_survey, pick_report, reeve_report
from lattice_pick.files import (
    CSV_HEADER, PolygonFile, dumps_polygon_file, dumps_report, loads_polygon_file, make_report,
    pick_report_body, polygon_file_document, read_polygon_file, reeve_body, survey_body, survey_csv,
    write_polygon_file,
)
from lattice_pick.plane import Normal

BIG = 2 ** 60


def document(**overrides):
    data = {"format_version": 1, "vertices": [list(v) for v in TRIANGLE_111]}
    data.update(overrides)
    return json.dumps(data)


def test_reads_minimal_file():
    parsed = loads_polygon_file(document())
    assert parsed.vertices == vectors(TRIANGLE_111)
    assert parsed.normal is None
    assert parsed.metadata == {}


def test_reads_normal_metadata_and_string_integers():
    parsed = loads_polygon_file(document(
        vertices=[["0", "0", "0"], ["1", "-1", "0"], [0, 1, -1]],
        normal=[2, 2, 2],
        metadata={"source": "hand"},
    ))
    assert parsed.vertices == vectors(TRIANGLE_111)
    assert parsed.normal == IntVec3(2, 2, 2)
    assert parsed.metadata == {"source": "hand"}


@pytest.mark.parametrize("text", [
    "{not json",
    document(format_version=2),
    document(vertices=[[0, 0, 0], [1, 0], [0, 1, 0]]),
    document(vertices=[[0, 0, 0], [1.0, 0, 0], [0, 1, 0]]),
    document(vertices=[[0, 0, 0], [1.5, 0, 0], [0, 1, 0]]),
    document(vertices=[[0, 0, 0], [True, 0, 0], [0, 1, 0]]),
    document(vertices=[[0, 0, 0], ["1e3", 0, 0], [0, 1, 0]]),
    document(normal=[1, 1]),
    document(metadata={"seed": 3}),
    document(colour="red"),
    json.dumps({"vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0]]}),
    json.dumps([[0, 0, 0], [1, 0, 0], [0, 1, 0]]),
])
def test_rejects_malformed_files(text):
    with pytest.raises(PolygonFileError):
        loads_polygon_file(text)


def test_vertex_count_is_left_to_polygon_validation():
    assert len(loads_polygon_file(document(vertices=[[0, 0, 0], [1, 0, 0]])).vertices) == 2


def test_missing_file(tmp_path):
    with pytest.raises(PolygonFileError):
        read_polygon_file(str(tmp_path / "missing.json"))


def test_big_integers_are_written_as_strings():
    polygon_file = PolygonFile(vertices=[IntVec3(0, 0, 0), IntVec3(BIG, 0, 0), IntVec3(0, 1, 0)])
    data = polygon_file_document(polygon_file)
    assert data["vertices"][1] == [str(BIG), 0, 0]
    assert loads_polygon_file(dumps_polygon_file(polygon_file)).vertices[1] == IntVec3(BIG, 0, 0)


def test_write_is_idempotent(tmp_path):
    polygon_file = PolygonFile(
        vertices=vectors(TRIANGLE_111) + [IntVec3(-BIG, BIG, 0)],
        normal=IntVec3(1, 1, 1),
        metadata={"seed": "4", "generator": "lattice_pick"},
    )
    path = str(tmp_path / "p.json")
    write_polygon_file(polygon_file, path)
    first = (tmp_path / "p.json").read_text(encoding="utf-8")
    write_polygon_file(read_polygon_file(path), path)
    assert (tmp_path / "p.json").read_text(encoding="utf-8") == first
    assert first.endswith("\n")
    assert list(json.loads(first)["metadata"]) == ["generator", "seed"]


def test_reads_file_from_disk(tmp_path):
    path = write_polygon(tmp_path / "triangle.json", TRIANGLE_111, normal=(1, 1, 1))
    assert read_polygon_file(path).normal == IntVec3(1, 1, 1)


def test_report_envelope(triangle_111):
    body = pick_report_body(pick_report(triangle_111), raw_normal=IntVec3(3, 3, 3))
    report = make_report("check", {"vertices": TRIANGLE_111}, body)
    assert report["tool"] == "lattice_pick"
    assert report["tool_version"] == __version__
    assert report["kind"] == "check"
    assert report["input_digest"].startswith("sha256:")
    assert report["input_digest"] == make_report("check", {"vertices": TRIANGLE_111}, {})["input_digest"]

    loaded = json.loads(dumps_report(report))["body"]
    assert loaded["polygon"]["normal"] == ["1", "1", "1"]
    assert loaded["polygon"]["raw_normal"] == ["3", "3", "3"]
    assert loaded["counts"] == {"interior": "0", "boundary": "3"}
    assert loaded["area_exact"] == {"coeff": "1/2", "radicand": "3"}
    assert loaded["k_paper"] == {"coeff": "2/1", "radicand": "3"}
    assert loaded["paper_ratio"] == "2/1"
    assert loaded["verdicts"] == {"paper_match": False, "covolume_match": True, "paper_applicable": True}


def test_survey_body_and_csv():
    record = constant_survey(Normal(1, 1, 1), trials=3, size_bound=6, seed=2)
    body = survey_body(record)
    assert body["trials"] == "3"
    assert body["all_equal"] is True
    assert [row["trial"] for row in body["rows"]] == ["0", "1", "2"]

    rows = list(csv.reader(io.StringIO(survey_csv(record))))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 4
    for row, trial in zip(rows[1:], record.rows):
        assert int(row[0]) == trial.index
        assert int(row[3]) == trial.counts.interior
        assert row[6] == str(trial.k_empirical.radicand)


def test_reeve_body():
    body = reeve_body([reeve_report(2)])
    assert body["rows"][0]["volume"] == "1/3"
    assert body["rows"][0]["vertices"][3] == ["1", "1", "2"]
