#!/usr/bin/env python3
"""Regenerates schemas/*.schema.json.

The schemas share number/weight-system definitions; generating them from one
place keeps the copies embedded in each (self-contained) file identical.
Run from the repository root:  python3 tools/gen_schemas.py
"""

import json
import pathlib

BIGUINT = {
    "description": (
        "Non-negative exact integer: a JSON number up to 2^53, a decimal "
        "string beyond"
    ),
    "anyOf": [
        {"type": "integer", "minimum": 0},
        {"type": "string", "pattern": "^(0|[1-9][0-9]*)$"},
    ],
}

BIGINT = {
    "description": (
        "Exact integer: a JSON number within +/-2^53, a decimal string beyond"
    ),
    "anyOf": [
        {"type": "integer"},
        {"type": "string", "pattern": "^-?(0|[1-9][0-9]*)$"},
    ],
}

RATIONAL = {
    "description": "Exact rational in lowest terms with positive denominator",
    "type": "object",
    "required": ["num", "den"],
    "additionalProperties": False,
    "properties": {
        "num": {"$ref": "#/$defs/bigint"},
        "den": {"$ref": "#/$defs/bigint"},
    },
}

WEIGHT_SYSTEM = {
    "description": "A weight system (a_1, ..., a_k; d) with k >= 2, 0 < a_i < d",
    "type": "object",
    "required": ["weights", "degree"],
    "additionalProperties": False,
    "properties": {
        "weights": {
            "type": "array",
            "minItems": 2,
            "items": {"$ref": "#/$defs/biguint"},
        },
        "degree": {"$ref": "#/$defs/biguint"},
    },
}

SINGULARITY_CLASS = {
    "description": "Position on the Du Bois / rational / liminal ladder",
    "type": "object",
    "required": [
        "liminal_defect",
        "minimal_exponent",
        "log_canonical",
        "rational",
        "max_du_bois",
        "max_rational",
        "liminal_level",
        "zero_liminal",
    ],
    "additionalProperties": False,
    "properties": {
        "liminal_defect": {"$ref": "#/$defs/bigint"},
        "minimal_exponent": {"$ref": "#/$defs/rational"},
        "log_canonical": {"type": "boolean"},
        "rational": {"type": "boolean"},
        "max_du_bois": {"$ref": "#/$defs/bigint"},
        "max_rational": {"$ref": "#/$defs/bigint"},
        "liminal_level": {
            "anyOf": [{"type": "integer", "minimum": 0}, {"type": "null"}]
        },
        "zero_liminal": {"type": "boolean"},
    },
}

SPECTRUM = {
    "description": "Spectral values with multiplicities, ascending",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["num", "den", "mult"],
        "additionalProperties": False,
        "properties": {
            "num": {"$ref": "#/$defs/bigint"},
            "den": {"$ref": "#/$defs/bigint"},
            "mult": {"$ref": "#/$defs/biguint"},
        },
    },
}

BIGUINT_ARRAY = {"type": "array", "items": {"$ref": "#/$defs/biguint"}}

T1 = {
    "description": "Torus-weight decomposition of T^1 with summary dimensions",
    "type": "object",
    "required": ["weights", "K", "Kprime", "Gr", "H1log", "H1logminusE"],
    "additionalProperties": False,
    "properties": {
        "weights": {
            "description": "Nonzero graded dimensions keyed by decimal weight",
            "type": "object",
            "patternProperties": {"^-?(0|[1-9][0-9]*)$": {"$ref": "#/$defs/biguint"}},
            "additionalProperties": False,
        },
        "K": {"$ref": "#/$defs/biguint"},
        "Kprime": {"$ref": "#/$defs/biguint"},
        "Gr": {"$ref": "#/$defs/biguint"},
        "H1log": {"$ref": "#/$defs/biguint"},
        "H1logminusE": {"$ref": "#/$defs/biguint"},
    },
}

FAMILY_REPORT = {
    "description": "Full report for one diagonal defect-zero family",
    "type": "object",
    "required": [
        "exponents",
        "weight_system",
        "class",
        "milnor_number",
        "s_vector",
        "t1",
    ],
    "additionalProperties": False,
    "properties": {
        "exponents": {
            "type": "array",
            "minItems": 2,
            "items": {"$ref": "#/$defs/biguint"},
        },
        "weight_system": {"$ref": "#/$defs/weightSystem"},
        "class": {"$ref": "#/$defs/singularityClass"},
        "milnor_number": {"$ref": "#/$defs/biguint"},
        "s_vector": BIGUINT_ARRAY,
        "t1": {"$ref": "#/$defs/t1"},
    },
}


def defs(*names):
    table = {
        "biguint": BIGUINT,
        "bigint": BIGINT,
        "rational": RATIONAL,
        "weightSystem": WEIGHT_SYSTEM,
        "singularityClass": SINGULARITY_CLASS,
        "spectrum": SPECTRUM,
        "t1": T1,
        "familyReport": FAMILY_REPORT,
    }
    return {name: table[name] for name in names}


def schema(id_name, title, body, *def_names):
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": f"https://example.invalid/liminal/{id_name}.schema.json",
        "title": title,
        **body,
        "$defs": defs(*def_names),
    }


SCHEMAS = {
    "classify": schema(
        "classify",
        "liminal classify --json output",
        {
            "type": "object",
            "required": ["system", "description", "class"],
            "additionalProperties": False,
            "properties": {
                "system": {"$ref": "#/$defs/weightSystem"},
                "description": {"type": "string"},
                "class": {"$ref": "#/$defs/singularityClass"},
            },
        },
        "biguint",
        "bigint",
        "rational",
        "weightSystem",
        "singularityClass",
    ),
    "spectrum": schema(
        "spectrum",
        "liminal spectrum --json output",
        {
            "type": "object",
            "required": [
                "system",
                "milnor_number",
                "top_degree",
                "poincare",
                "spectrum",
                "s_vector",
            ],
            "additionalProperties": False,
            "properties": {
                "system": {"$ref": "#/$defs/weightSystem"},
                "milnor_number": {"$ref": "#/$defs/biguint"},
                "top_degree": {"type": "integer", "minimum": 0},
                "poincare": BIGUINT_ARRAY,
                "spectrum": {"$ref": "#/$defs/spectrum"},
                "s_vector": BIGUINT_ARRAY,
            },
        },
        "biguint",
        "bigint",
        "weightSystem",
        "spectrum",
    ),
    "t1": schema(
        "t1",
        "liminal t1 --json output",
        {
            "type": "object",
            "required": ["system", "milnor_number", "labels_valid", "t1"],
            "additionalProperties": False,
            "properties": {
                "system": {"$ref": "#/$defs/weightSystem"},
                "milnor_number": {"$ref": "#/$defs/biguint"},
                "labels_valid": {"type": "boolean"},
                "t1": {"$ref": "#/$defs/t1"},
            },
        },
        "biguint",
        "bigint",
        "weightSystem",
        "t1",
    ),
    "enumerate": schema(
        "enumerate",
        "liminal enumerate --json output",
        {
            "anyOf": [
                {
                    "description": "Default: bare exponent tuples",
                    "type": "array",
                    "items": {
                        "type": "array",
                        "minItems": 2,
                        "items": {"$ref": "#/$defs/biguint"},
                    },
                },
                {
                    "description": "--reports: one full report per family",
                    "type": "array",
                    "items": {"$ref": "#/$defs/familyReport"},
                },
            ]
        },
        "biguint",
        "bigint",
        "rational",
        "weightSystem",
        "singularityClass",
        "t1",
        "familyReport",
    ),
    "suite": schema(
        "suite",
        "liminal suite --json output",
        {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "n",
                    "global_t1",
                    "pair_moduli",
                    "dim_A_system",
                    "moduli_E",
                    "t_minus",
                    "identity_holds",
                    "local_full",
                    "local_image",
                    "local_codim",
                    "log_h2_nonzero",
                ],
                "additionalProperties": False,
                "properties": {
                    "n": {"type": "integer", "minimum": 3},
                    "global_t1": {"$ref": "#/$defs/biguint"},
                    "pair_moduli": {"$ref": "#/$defs/biguint"},
                    "dim_A_system": {"$ref": "#/$defs/biguint"},
                    "moduli_E": {"$ref": "#/$defs/biguint"},
                    "t_minus": {"$ref": "#/$defs/biguint"},
                    "identity_holds": {"type": "boolean"},
                    "local_full": {"$ref": "#/$defs/biguint"},
                    "local_image": {"$ref": "#/$defs/biguint"},
                    "local_codim": {"$ref": "#/$defs/biguint"},
                    "log_h2_nonzero": {"type": "boolean"},
                },
            },
        },
        "biguint",
    ),
    "dual-complex-input": schema(
        "dual-complex-input",
        "liminal dual-complex --input file",
        {
            "type": "object",
            "required": ["n", "components"],
            "additionalProperties": False,
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "components": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"type": "string"},
                },
                "faces": {
                    "description": (
                        "Any generating set of faces as component indices; "
                        "the downward closure and all singletons are implied"
                    ),
                    "type": "array",
                    "items": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "integer", "minimum": 0},
                    },
                },
                "h": {
                    "description": (
                        "Stratum cohomology overrides; h^0 defaults to 1, "
                        "higher h^q to 0"
                    ),
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["face", "q", "dim"],
                        "additionalProperties": False,
                        "properties": {
                            "face": {
                                "type": "array",
                                "minItems": 1,
                                "items": {"type": "integer", "minimum": 0},
                            },
                            "q": {"type": "integer", "minimum": 0},
                            "dim": {"type": "integer", "minimum": 0},
                        },
                    },
                },
            },
        },
    ),
    "dual-complex-report": schema(
        "dual-complex-report",
        "liminal dual-complex --json output",
        {
            "type": "object",
            "required": [
                "n",
                "components",
                "face_counts",
                "e1",
                "cohomology",
                "violations",
            ],
            "additionalProperties": False,
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "components": {"type": "array", "items": {"type": "string"}},
                "face_counts": {
                    "type": "array",
                    "items": {"type": "integer", "minimum": 0},
                },
                "e1": {
                    "description": "e1[q][p] = sum of h^q over faces with p+1 vertices",
                    "type": "array",
                    "items": {
                        "type": "array",
                        "items": {"type": "integer", "minimum": 0},
                    },
                },
                "cohomology": {
                    "type": "array",
                    "items": {"type": "integer", "minimum": 0},
                },
                "violations": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["clause", "detail"],
                        "additionalProperties": False,
                        "properties": {
                            "clause": {"enum": ["a", "b", "c"]},
                            "detail": {"type": "string"},
                        },
                    },
                },
            },
        },
    ),
    "registry": schema(
        "registry",
        "liminal registry list --json output",
        {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "system", "note"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string"},
                    "system": {"$ref": "#/$defs/weightSystem"},
                    "note": {"type": "string"},
                    "verified": {"type": "boolean"},
                },
            },
        },
        "biguint",
        "weightSystem",
    ),
    "batch-report": schema(
        "batch-report",
        "liminal batch --json output",
        {
            "type": "object",
            "required": ["summary", "reports", "skipped"],
            "additionalProperties": False,
            "properties": {
                "summary": {
                    "type": "object",
                    "required": ["total", "ok", "skipped"],
                    "additionalProperties": False,
                    "properties": {
                        "total": {"type": "integer", "minimum": 0},
                        "ok": {"type": "integer", "minimum": 0},
                        "skipped": {"type": "integer", "minimum": 0},
                    },
                },
                "reports": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": [
                            "index",
                            "system",
                            "description",
                            "class",
                            "milnor_number",
                            "poincare",
                            "spectrum",
                            "s_vector",
                            "labels_valid",
                            "t1",
                        ],
                        "additionalProperties": False,
                        "properties": {
                            "index": {"type": "integer", "minimum": 0},
                            "system": {"$ref": "#/$defs/weightSystem"},
                            "description": {"type": "string"},
                            "class": {"$ref": "#/$defs/singularityClass"},
                            "milnor_number": {"$ref": "#/$defs/biguint"},
                            "poincare": BIGUINT_ARRAY,
                            "spectrum": {"$ref": "#/$defs/spectrum"},
                            "s_vector": BIGUINT_ARRAY,
                            "labels_valid": {"type": "boolean"},
                            "t1": {"$ref": "#/$defs/t1"},
                        },
                    },
                },
                "skipped": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["index", "input", "error"],
                        "additionalProperties": False,
                        "properties": {
                            "index": {"type": "integer", "minimum": 0},
                            "input": True,
                            "error": {"type": "string"},
                        },
                    },
                },
            },
        },
        "biguint",
        "bigint",
        "rational",
        "weightSystem",
        "singularityClass",
        "spectrum",
        "t1",
    ),
}


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "schemas"
    root.mkdir(exist_ok=True)
    for name, content in SCHEMAS.items():
        path = root / f"{name}.schema.json"
        path.write_text(json.dumps(content, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
