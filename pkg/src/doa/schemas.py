"""Frozen JSON schemas for every CLI report (draft 2020-12)."""

SCHEMA_VERSION = "1.0"

_POLY_LIST = {"type": "array", "items": {"type": "string"}}

OBSTRUCTION_SYSTEM = {
    "type": "object",
    "required": ["n", "generators", "provenance"],
    "properties": {
        "n": {"type": "integer", "minimum": 4},
        "generators": _POLY_LIST,
        "provenance": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["source", "g", "triple", "label"],
                "properties": {
                    "source": {"type": "string"},
                    "g": {"type": "string"},
                    "triple": {"type": "array", "items": {"type": "string"}},
                    "label": {"type": "string"},
                },
            },
        },
    },
}

_ENVELOPE = {
    "schema_version": {"const": SCHEMA_VERSION},
    "verb": {"type": "string"},
    "elapsed_ms": {"type": "integer"},
}


def _report(verb, required, props):
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["schema_version", "verb"] + required,
        "properties": dict(_ENVELOPE, verb={"const": verb}, **props),
    }


_PROPERTY = {
    "type": "object",
    "required": ["status", "witnesses", "system"],
    "properties": {
        "status": {"enum": ["pass", "fail", "conditional"]},
        "witnesses": {"type": "array"},
        "system": {"oneOf": [{"type": "null"}, OBSTRUCTION_SYSTEM]},
    },
}

SCHEMAS = {
    "verify": _report("verify", ["family", "n", "status", "properties", "residual"], {
        "family": {"type": "string"},
        "n": {"type": "integer"},
        "status": {"enum": ["pass", "fail", "conditional"]},
        "properties": {"type": "object", "additionalProperties": _PROPERTY},
        "residual": OBSTRUCTION_SYSTEM,
        "certificate": {"type": ["object", "null"]},
    }),
    "extract": _report("extract", ["system", "count"], {
        "system": OBSTRUCTION_SYSTEM,
        "count": {"type": "integer"},
        "out": {"type": ["string", "null"]},
    }),
    "compare": _report("compare", ["mode", "equal", "left_count", "right_count", "left_only", "right_only"], {
        "mode": {"enum": ["set", "ideal"]},
        "equal": {"type": "boolean"},
        "left_count": {"type": "integer"},
        "right_count": {"type": "integer"},
        "left_only": _POLY_LIST,
        "right_only": _POLY_LIST,
    }),
    "groebner": _report("groebner", ["symbols", "size", "spairs", "timeout"], {
        "symbols": {"type": "array", "items": {"type": "string"}},
        "size": {"type": "integer"},
        "generators": _POLY_LIST,
        "affine_dim": {"type": "integer"},
        "projective_dim": {"type": "integer"},
        "degree": {"type": "integer"},
        "spairs": {"type": "integer"},
        "timeout": {"type": "boolean"},
    }),
    "oracle": _report("oracle", ["pass", "witness", "triples_checked"], {
        "pass": {"type": "boolean"},
        "witness": {"type": ["object", "null"]},
        "triples_checked": {"type": "integer"},
        "symbolic_agrees": {"type": ["boolean", "null"]},
    }),
    "invariants": _report("invariants", ["n", "pass", "checks"], {
        "n": {"type": "integer"},
        "pass": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "pass", "detail", "elapsed_ms"],
                "properties": {"name": {"type": "string"}, "pass": {"type": "boolean"},
                               "detail": {"type": "string"}, "elapsed_ms": {"type": "integer"}},
            },
        },
    }),
}


def report_schema_version():
    return SCHEMA_VERSION
