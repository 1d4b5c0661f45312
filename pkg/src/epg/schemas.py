"""JSON schemas for emitted series, genus reports and check reports."""
from __future__ import annotations

import jsonschema

_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_BOUND = {"anyOf": [_RATIONAL, {"type": "null"}]}

SERIES_SCHEMA = {
    "type": "object",
    "required": ["denom", "qmax", "ywindow", "terms"],
    "properties": {
        "denom": {"type": "integer", "minimum": 1},
        "qmax": _BOUND,
        "ywindow": _BOUND,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["q", "y", "coeff"],
                "properties": {
                    "q": _RATIONAL,
                    "y": _RATIONAL,
                    "coeff": {"type": "array", "items": _RATIONAL, "minItems": 1},
                },
                "additionalProperties": False,
            },
        },
    },
}

GENUS_SCHEMA = {
    "type": "object",
    "allOf": [SERIES_SCHEMA],
    "required": ["formula", "params", "dimension", "index", "cy_flag"],
    "properties": {
        "formula": {"type": "string"},
        "params": {"type": "object"},
        "dimension": _RATIONAL,
        "index": _RATIONAL,
        "cy_flag": {"type": "boolean"},
        "sectors": {"type": "integer", "minimum": 0},
    },
}

CHECK_SCHEMA = {
    "type": "object",
    "required": ["name", "passed", "status", "detail", "region"],
    "properties": {
        "name": {"type": "string"},
        "passed": {"type": "boolean"},
        "status": {"enum": ["pass", "fail", "inconclusive"]},
        "detail": {"type": "string"},
        "region": {"type": "object"},
    },
}

CHECK_LIST_SCHEMA = {"type": "array", "items": CHECK_SCHEMA}

CAMPAIGN_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["check"],
        "properties": {"check": {"type": "string"}, "params": {"type": "object"}},
    },
}


def validate(data, schema) -> None:
    jsonschema.validate(data, schema)
