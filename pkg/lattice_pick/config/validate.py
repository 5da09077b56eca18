from jsonschema import Draft7Validator

from lattice_pick.errors import ConfigError, PolygonFileError

POSITIVE_INT = {"type": "integer", "minimum": 1}

CONFIG_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "survey": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "trials": POSITIVE_INT,
                "size": POSITIVE_INT,
                "seed": {"type": "integer"},
                "vertices": {"type": "integer", "minimum": 3},
            },
        },
        "generate": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "size": POSITIVE_INT,
                "seed": {"type": "integer"},
                "vertices": {"type": "integer", "minimum": 3},
            },
        },
        "workers": POSITIVE_INT,
    },
}

EXACT_INTEGER = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": "^-?[0-9]+$"},
    ]
}

INTEGER_TRIPLE = {"type": "array", "items": EXACT_INTEGER, "minItems": 3, "maxItems": 3}

POLYGON_FILE_SCHEMA = {
    "type": "object",
    "required": ["format_version", "vertices"],
    "additionalProperties": False,
    "properties": {
        "format_version": {"const": 1},
        "vertices": {"type": "array", "items": INTEGER_TRIPLE},
        "normal": INTEGER_TRIPLE,
        "metadata": {"type": "object", "additionalProperties": {"type": "string"}},
    },
}


def _first_error(instance, schema):
    errors = sorted(Draft7Validator(schema).iter_errors(instance), key=lambda e: list(e.absolute_path))
    if not errors:
        return None
    error = errors[0]
    location = "/".join(str(p) for p in error.absolute_path) or "<root>"
    return f"{location}: {error.message}"


def validate_config(config):
    message = _first_error(config, CONFIG_SCHEMA)
    if message:
        raise ConfigError(f"invalid lattice_pick.yml: {message}")


def validate_polygon_document(document):
    message = _first_error(document, POLYGON_FILE_SCHEMA)
    if message:
        raise PolygonFileError(f"invalid polygon file: {message}")
