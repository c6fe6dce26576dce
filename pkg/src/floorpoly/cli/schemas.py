"""JSON Schemas for every document the CLI prints or reads."""

_INT = {"type": "integer"}
_NONNEG = {"type": "integer", "minimum": 0}

CERTIFICATE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "certificate",
    "type": "object",
    "properties": {
        "type": {"enum": ["nonud", "incomplete", "run"]},
        "p": {"type": "integer", "minimum": 2},
        "modulus": {"type": "integer", "minimum": 2},
        "a": _INT,
        "class": _NONNEG,
        "count": _NONNEG,
        "t": {"type": "integer", "minimum": 1},
        "l": {"type": "integer", "minimum": 1},
        "n": {"type": "integer", "minimum": 1},
        "period": {"type": "integer", "minimum": 1},
        "poly": {"type": "string"},
    },
    "required": ["type", "p", "period", "poly"],
    "additionalProperties": False,
    "allOf": [
        {
            "if": {"properties": {"type": {"const": "nonud"}}},
            "then": {"required": ["modulus", "class", "count"]},
        },
        {
            "if": {"properties": {"type": {"const": "incomplete"}}},
            "then": {"required": ["class"]},
        },
        {
            "if": {"properties": {"type": {"const": "run"}}},
            "then": {"required": ["t", "l", "n"]},
        },
    ],
}

VERDICT = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["UdInZ", "NotUd", "CompleteInZ", "Incomplete", "Unknown"]},
        "reason": {"type": "string"},
        "certificate": {"oneOf": [{"type": "null"}, CERTIFICATE]},
        "budget": {"type": "object"},
        "degenerate": {"type": "boolean"},
    },
    "required": ["kind", "reason", "certificate"],
    "additionalProperties": False,
}

HISTOGRAM = {
    "type": "object",
    "properties": {
        "poly": {"type": "string"},
        "m": {"type": "integer", "minimum": 2},
        "counts": {"type": "array", "items": _NONNEG},
        "scanned": {"type": "integer", "minimum": 1},
        "exact": {"type": "boolean"},
    },
    "required": ["poly", "m", "counts", "scanned", "exact"],
    "additionalProperties": False,
}

UDCHECK = {
    "type": "object",
    "properties": {
        "poly": {"type": "string"},
        "m": {"type": "integer", "minimum": 2},
        "ud": {"type": "boolean"},
        "period": {"type": "integer", "minimum": 1},
        "counts": {"type": "array", "items": _NONNEG},
    },
    "required": ["poly", "m", "ud", "period", "counts"],
    "additionalProperties": False,
}

COMPLETE = {
    "type": "object",
    "properties": {
        "poly": {"type": "string"},
        "m": {"type": "integer", "minimum": 2},
        "complete": {"type": "boolean"},
        "missing": {"type": "array", "items": _NONNEG},
        "period": {"type": "integer", "minimum": 1},
    },
    "required": ["poly", "m", "complete", "missing", "period"],
    "additionalProperties": False,
}

CLASSIFY = {
    "type": "object",
    "properties": {"poly": {"type": "string"}, "ud": VERDICT, "complete": VERDICT},
    "required": ["poly", "ud", "complete"],
    "additionalProperties": False,
}

WEYL = {
    "type": "object",
    "properties": {
        "poly": {"type": "string"},
        "m": {"type": "integer", "minimum": 2},
        "samples": {"type": "integer", "minimum": 1},
        "sums": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "h": {"type": "integer", "minimum": 1},
                    "magnitude": {"type": "number", "minimum": 0, "maximum": 1},
                },
                "required": ["h", "magnitude"],
                "additionalProperties": False,
            },
        },
        "max_magnitude": {"type": "number", "minimum": 0, "maximum": 1},
    },
    "required": ["poly", "m", "samples", "sums", "max_magnitude"],
    "additionalProperties": False,
}

VERIFY = {
    "type": "object",
    "properties": {
        "valid": {"type": "boolean"},
        "type": {"enum": ["nonud", "incomplete", "run"]},
        "error": {"type": "string"},
    },
    "required": ["valid"],
    "additionalProperties": False,
}

BY_COMMAND = {
    "dist": HISTOGRAM,
    "udcheck": UDCHECK,
    "complete": COMPLETE,
    "classify": CLASSIFY,
    "witness-nonud": {"oneOf": [CERTIFICATE, VERDICT]},
    "witness-incomplete": {"oneOf": [CERTIFICATE, VERDICT]},
    "run-search": {"oneOf": [CERTIFICATE, VERDICT]},
    "weyl": WEYL,
    "verify": VERIFY,
}
