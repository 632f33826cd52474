"""Draft 7 JSON schemas for every document the CLI reads or writes.

Rationals are always strings "p" or "p/q" so no float ever enters a document.
"""
from typing import Any, Dict

RAT = {"type": "string", "pattern": r"^[+-]?[0-9]+(/[0-9]+)?$"}
RAT_LIST = {"type": "array", "items": RAT}
INDEX = {"type": "integer", "minimum": 0}

ALGEBRA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "algebra",
    "type": "object",
    "required": ["dim", "c", "unit", "form"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "c": {"type": "array", "items": {"type": "array", "items": RAT_LIST}},
        "unit": RAT_LIST,
        "form": RAT_LIST,
    },
}

GROUP = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "group",
    "type": "object",
    "required": ["order", "table", "unit"],
    "properties": {
        "order": {"type": "integer", "minimum": 1},
        "table": {"type": "array", "items": {"type": "array", "items": INDEX}},
        "unit": INDEX,
    },
}

# A skeleton, or a Frobenius algebra when lambdas are present.
FROBENIUS = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "frobenius",
    "type": "object",
    "required": ["dims"],
    "properties": {
        "dims": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}},
        "lambdas": RAT_LIST,
    },
}

_CONTEXT_DATA = {
    "perm": {"type": "array", "items": INDEX},
    "eps": RAT_LIST,
    "eta": RAT_LIST,
}

CONTEXT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "context",
    "type": "object",
    "required": ["source", "target", "perm", "eps", "eta"],
    "properties": dict(_CONTEXT_DATA, source=FROBENIUS, target=FROBENIUS),
}

_FROBENIUS_REQUIRED = dict(FROBENIUS, required=["dims", "lambdas"])

FIXEDPOINT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "fixedpoint",
    "type": "object",
    "required": ["algebra", "lambda_central"],
    "properties": {"algebra": _FROBENIUS_REQUIRED, "lambda_central": RAT_LIST},
}

_MORPHISM = {
    "type": "object",
    "required": ["f", "g"],
    "properties": {"f": RAT_LIST, "g": RAT_LIST},
}

FIXEDPOINT_DATA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "fixedpoint-data",
    "type": "object",
    "required": ["algebra", "theta", "big_m", "lambda_tilde", "pi"],
    "properties": {
        "algebra": _FROBENIUS_REQUIRED,
        "theta": {"type": "object", "required": ["perm", "eps", "eta"], "properties": _CONTEXT_DATA},
        "big_m": _MORPHISM,
        "lambda_tilde": _MORPHISM,
        "pi": _MORPHISM,
    },
}

MORPHISM = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "morphism",
    "type": "object",
    "required": ["source", "target", "context"],
    "properties": {
        "source": FIXEDPOINT,
        "target": FIXEDPOINT,
        "context": {"type": "object", "required": ["perm", "eps", "eta"], "properties": _CONTEXT_DATA},
    },
}

CYCAT = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "cycat",
    "type": "object",
    "required": ["simples", "traces"],
    "properties": {"simples": {"type": "integer", "minimum": 1}, "traces": RAT_LIST},
}

SCHEMAS: Dict[str, Dict[str, Any]] = {
    "algebra": ALGEBRA,
    "group": GROUP,
    "frobenius": FROBENIUS,
    "context": CONTEXT,
    "fixedpoint": FIXEDPOINT,
    "fixedpoint-data": FIXEDPOINT_DATA,
    "morphism": MORPHISM,
    "cycat": CYCAT,
}
