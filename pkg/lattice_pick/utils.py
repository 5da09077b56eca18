import hashlib
import json
import re
from typing import Any, Tuple

import click

from lattice_pick.exact import IntVec3

RANGE_PATTERN = re.compile(r'^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$')


def parse_normal(text: str) -> IntVec3:
    parts = text.split(',')
    if len(parts) != 3:
        raise click.BadParameter(f"expected three comma-separated integers, got {text!r}", param_hint='--normal')
    try:
        return IntVec3.of(int(p.strip()) for p in parts)
    except ValueError:
        raise click.BadParameter(f"expected three comma-separated integers, got {text!r}", param_hint='--normal')


def parse_r_range(text: str) -> Tuple[int, int]:
    """'5' -> (5, 5); '1..5' -> (1, 5), inclusive."""
    match = RANGE_PATTERN.match(text)
    if not match:
        raise click.BadParameter(f"expected N or LO..HI, got {text!r}", param_hint='--r')
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise click.BadParameter(f"empty range {text!r}", param_hint='--r')
    return lo, hi


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(',', ':'))


def input_digest(data: Any) -> str:
    return "sha256:" + hashlib.sha256(canonical_json(data).encode('utf-8')).hexdigest()
