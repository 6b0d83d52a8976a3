"""Published JSON schemas for every CLI output (validated in the test suite)."""

from __future__ import annotations

FACTOR = {
    "type": "object",
    "properties": {
        "copy": {"enum": ["w", "wp"]},
        "i": {"type": "integer", "minimum": 1},
        "j": {"type": "integer", "minimum": 2},
    },
    "required": ["copy", "i", "j"],
    "additionalProperties": False,
}

ELEMENT = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {
            "coeff": {"type": "string", "pattern": "^-?[0-9]+$"},
            "factors": {"type": "array", "items": FACTOR},
        },
        "required": ["coeff", "factors"],
        "additionalProperties": False,
    },
}

_COMMON = {
    "m": {"type": "integer", "minimum": 1},
    "n": {"type": "integer", "minimum": 1},
    "d": {"type": "integer", "minimum": 2},
}

BASIS_OUTPUT = {
    "type": "object",
    "properties": {
        **_COMMON,
        "mode": {"enum": ["one-copy", "two-copy"]},
        "step": {"type": "integer", "minimum": 0},
        "count": {"type": "integer", "minimum": 0},
        "monomials": {"type": "array", "items": {"type": "array", "items": FACTOR}},
    },
    "required": ["m", "n", "d", "mode", "step", "count", "monomials"],
    "additionalProperties": False,
}

REDUCE_OUTPUT = {
    "type": "object",
    "properties": {
        **_COMMON,
        "mode": {"enum": ["one-copy", "two-copy"]},
        "element": ELEMENT,
        "text": {"type": "string"},
    },
    "required": ["m", "n", "d", "mode", "element", "text"],
    "additionalProperties": False,
}

EXPAND_OUTPUT = {
    "type": "object",
    "properties": {
        **_COMMON,
        "mode": {"enum": ["one-copy", "two-copy"]},
        "J": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "r": {"type": "integer", "minimum": 2},
        "copy": {"enum": ["w", "wp"]},
        "element": ELEMENT,
        "text": {"type": "string"},
    },
    "required": ["m", "n", "d", "mode", "J", "r", "copy", "element", "text"],
    "additionalProperties": False,
}

ADMISSIBLE_OUTPUT = {
    "type": "object",
    "properties": {
        "J": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "count": {"type": "integer", "minimum": 1},
        "sequences": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "sequence": {"type": "array", "items": {"type": "integer"}},
                    "distinct_count": {"type": "integer", "minimum": 1},
                },
                "required": ["sequence", "distinct_count"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["J", "count", "sequences"],
    "additionalProperties": False,
}

POINCARE_OUTPUT = {
    "type": "object",
    "properties": {
        **_COMMON,
        "space": {"enum": ["B", "E", "X", "EXBE"]},
        "gen_degree": {"type": "integer", "minimum": 1},
        "coefficients": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "required": ["m", "n", "d", "space", "gen_degree", "coefficients"],
    "additionalProperties": False,
}

ORACLE_OUTPUT = {
    "type": "object",
    "properties": {
        **_COMMON,
        "space": {"enum": ["B", "E", "X", "EXBE"]},
        "ok": {"type": "boolean"},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "step": {"type": "integer", "minimum": 0},
                    "spanning": {"type": "integer", "minimum": 0},
                    "rank": {"type": "integer", "minimum": 0},
                    "dimension": {"type": "integer", "minimum": 0},
                    "basis_count": {"type": "integer", "minimum": 0},
                    "basis_match": {"type": "boolean"},
                    "torsion_free": {"type": "boolean"},
                    "nontrivial_factors": {
                        "type": "array",
                        "items": {"type": "integer"},
                    },
                },
                "required": [
                    "step",
                    "spanning",
                    "rank",
                    "dimension",
                    "basis_count",
                    "basis_match",
                    "torsion_free",
                    "nontrivial_factors",
                ],
                "additionalProperties": False,
            },
        },
        "spot_checks": {"type": "integer", "minimum": 0},
    },
    "required": ["m", "n", "d", "space", "ok", "steps"],
    "additionalProperties": False,
}

PSI_OUTPUT = {
    "type": "object",
    "properties": {
        **_COMMON,
        "factor_count": {"type": "integer", "minimum": 0},
        "element": ELEMENT,
        "text": {"type": "string"},
        "witness": {"type": "array", "items": FACTOR},
        "witness_coefficient": {"type": "string", "pattern": "^-?[0-9]+$"},
    },
    "required": ["m", "n", "d", "factor_count", "element", "text", "witness", "witness_coefficient"],
    "additionalProperties": False,
}

CERTIFICATE_OUTPUT = {
    "type": "object",
    "properties": {
        **_COMMON,
        "lower_bound": {"type": "integer", "minimum": 0},
        "upper_bound": {"type": ["integer", "null"]},
        "verdict": {"type": ["integer", "null"]},
        "witness": {"type": "array", "items": FACTOR},
        "witness_coefficient": {"type": "string", "pattern": "^-?[0-9]+$"},
        "psi_terms": ELEMENT,
        "vanishing_exponent": {"type": ["integer", "null"]},
        "vanishing_reason": {"type": "string"},
    },
    "required": [
        "m",
        "n",
        "d",
        "lower_bound",
        "upper_bound",
        "verdict",
        "witness",
        "witness_coefficient",
        "psi_terms",
        "vanishing_exponent",
        "vanishing_reason",
    ],
    "additionalProperties": False,
}

PTC_OUTPUT = {
    "type": "object",
    "properties": {
        **_COMMON,
        "value": {"type": "integer", "minimum": 0},
        "certificate": {"anyOf": [CERTIFICATE_OUTPUT, {"type": "null"}]},
        "upper_note": {"type": "string"},
        "remarks": {"type": "array", "items": {"type": "string"}},
    },
    "required": ["m", "n", "d", "value", "certificate", "upper_note", "remarks"],
    "additionalProperties": False,
}

_POINT = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}

TRIVIALIZE_OUTPUT = {
    "type": "object",
    "properties": {
        "moved": {"type": "array", "items": _POINT},
        "base": {"type": "array", "items": _POINT, "minItems": 2, "maxItems": 2},
    },
    "required": ["moved", "base"],
    "additionalProperties": False,
}

UNTRIVIALIZE_OUTPUT = {
    "type": "object",
    "properties": {
        "points": {"type": "array", "items": _POINT},
    },
    "required": ["points"],
    "additionalProperties": False,
}

CLI_SCHEMAS = {
    "basis": BASIS_OUTPUT,
    "reduce": REDUCE_OUTPUT,
    "expand": EXPAND_OUTPUT,
    "admissible": ADMISSIBLE_OUTPUT,
    "poincare": POINCARE_OUTPUT,
    "oracle-verify": ORACLE_OUTPUT,
    "psi": PSI_OUTPUT,
    "cuplength": CERTIFICATE_OUTPUT,
    "ptc": PTC_OUTPUT,
    "trivialize": TRIVIALIZE_OUTPUT,
    "trivialize-inverse": UNTRIVIALIZE_OUTPUT,
}
