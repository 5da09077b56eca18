"""
Polygon files, JSON reports and survey CSV.

Every exact value is written losslessly: report integers as decimal strings,
rationals as "p/q" and surds as {"coeff": "p/q", "radicand": "N"}.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import lattice_pick
from lattice_pick.config.system import load_file_contents_as_string, write_file_contents
from lattice_pick.config.validate import validate_polygon_document
from lattice_pick.errors import PolygonFileError
from lattice_pick.exact import IntVec3, format_rational
from lattice_pick.utils import input_digest

FORMAT_VERSION = 1
JSON_SAFE_INTEGER = 2 ** 53

CSV_HEADER = ['trial', 'vertex_count', 't', 'interior', 'boundary', 'k_empirical_coeff', 'k_empirical_radicand']


@dataclass
class PolygonFile:
    vertices: List[IntVec3]
    normal: Optional[IntVec3] = None
    metadata: Dict[str, str] = field(default_factory=dict)
    format_version: int = FORMAT_VERSION


def _exact_integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise PolygonFileError(f"{where}: expected an integer, got {value!r}")
    return int(value)


def _triple(values: Sequence[Any], where: str) -> IntVec3:
    return IntVec3(*(_exact_integer(v, f"{where}/{i}") for i, v in enumerate(values)))


def parse_polygon_document(document: Any) -> PolygonFile:
    validate_polygon_document(document)
    vertices = [_triple(v, f"vertices/{i}") for i, v in enumerate(document['vertices'])]
    normal = _triple(document['normal'], "normal") if 'normal' in document else None
    return PolygonFile(
        vertices=vertices,
        normal=normal,
        metadata=dict(document.get('metadata') or {}),
        format_version=document['format_version'],
    )


def loads_polygon_file(text: str) -> PolygonFile:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise PolygonFileError(f"polygon file is not valid JSON: {e}")
    return parse_polygon_document(document)


def read_polygon_file(path: str) -> PolygonFile:
    try:
        text = load_file_contents_as_string(path)
    except OSError as e:
        raise PolygonFileError(f"cannot read polygon file {path}: {e.strerror}")
    except UnicodeDecodeError as e:
        raise PolygonFileError(f"polygon file {path} is not utf-8: {e.reason} at byte {e.start}")
    return loads_polygon_file(text)


def _file_integer(value: int):
    return value if -JSON_SAFE_INTEGER < value < JSON_SAFE_INTEGER else str(value)


def polygon_file_document(polygon_file: PolygonFile) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        'format_version': polygon_file.format_version,
        'vertices': [[_file_integer(c) for c in v] for v in polygon_file.vertices],
    }
    if polygon_file.normal is not None:
        document['normal'] = [_file_integer(c) for c in polygon_file.normal]
    if polygon_file.metadata:
        document['metadata'] = dict(sorted(polygon_file.metadata.items()))
    return document


def dumps_polygon_file(polygon_file: PolygonFile) -> str:
    return json.dumps(polygon_file_document(polygon_file), indent=2) + "\n"


def write_polygon_file(polygon_file: PolygonFile, path: str) -> None:
    write_file_contents(path, dumps_polygon_file(polygon_file))


def integer(value: int) -> str:
    return str(value)


def vector(v) -> List[str]:
    return [str(c) for c in v]


def optional_rational(value) -> Optional[str]:
    return None if value is None else format_rational(value)


def optional_surd(value) -> Optional[Dict[str, str]]:
    return None if value is None else value.to_dict()


def pick_report_body(report, raw_normal: Optional[IntVec3] = None) -> Dict[str, Any]:
    return {
        'polygon': {
            'vertex_count': integer(report.vertex_count),
            'normal': vector(report.normal.as_vector()),
            'raw_normal': vector(raw_normal) if raw_normal is not None else None,
            'offset': integer(report.offset),
        },
        'counts': {
            'interior': integer(report.counts.interior),
            'boundary': integer(report.counts.boundary),
        },
        'area_exact': report.area_exact.to_dict(),
        'k_paper': report.k_paper.to_dict(),
        'area_paper_predicted': report.area_paper_predicted.to_dict(),
        'k_empirical': report.k_empirical.to_dict(),
        'covolume': report.covolume.to_dict(),
        'paper_ratio': optional_rational(report.paper_ratio),
        'verdicts': {
            'paper_match': report.paper_match,
            'covolume_match': report.covolume_match,
            'paper_applicable': report.paper_applicable,
        },
    }


def survey_body(record, raw_normal: Optional[IntVec3] = None) -> Dict[str, Any]:
    return {
        'normal': vector(record.normal.as_vector()),
        'raw_normal': vector(raw_normal) if raw_normal is not None else None,
        'trials': integer(record.trials),
        'size_bound': integer(record.size_bound),
        'seed': integer(record.seed),
        'all_equal': record.all_equal,
        'common_value': optional_surd(record.common_value),
        'k_paper': record.k_paper.to_dict() if record.paper_applicable else None,
        'paper_applicable': record.paper_applicable,
        'covolume': record.covolume.to_dict(),
        'covolume_match': record.covolume_match,
        'paper_ratio': optional_rational(record.paper_ratio),
        'rows': [
            {
                'trial': integer(row.index),
                'vertex_count': integer(row.vertex_count),
                't': integer(row.t),
                'interior': integer(row.counts.interior),
                'boundary': integer(row.counts.boundary),
                'k_empirical': row.k_empirical.to_dict(),
            }
            for row in record.rows
        ],
    }


def reeve_body(tetrahedra) -> Dict[str, Any]:
    return {
        'rows': [
            {
                'r': integer(t.r),
                'vertices': [vector(v) for v in t.vertices],
                'total_lattice_points': integer(t.total_lattice_points),
                'boundary_points': integer(t.boundary_points),
                'interior_points': integer(t.interior_points),
                'volume': format_rational(t.volume),
            }
            for t in tetrahedra
        ],
    }


def worked_example_body(example) -> Dict[str, Any]:
    return {
        'interior': integer(example.counts.interior),
        'boundary': integer(example.counts.boundary),
        'pick_value': format_rational(example.pick_value),
        'paper_text_value': integer(example.text_value) if example.text_value is not None else None,
        'notes': list(example.notes),
    }


def make_report(kind: str, inputs: Any, body: Dict[str, Any]) -> Dict[str, Any]:
    return {
        'tool': 'lattice_pick',
        'tool_version': lattice_pick.__version__,
        'kind': kind,
        'input_digest': input_digest(inputs),
        'body': body,
    }


def dumps_report(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def survey_csv(record) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in record.rows:
        writer.writerow([
            row.index,
            row.vertex_count,
            row.t,
            row.counts.interior,
            row.counts.boundary,
            format_rational(row.k_empirical.coeff),
            row.k_empirical.radicand,
        ])
    return buffer.getvalue()
