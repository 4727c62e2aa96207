"""Variety specs, the builtin G2 and Spin7 entries, and verification suites."""
from ..polyexpr import PolyExpr, parse_poly
from .spec import (
    BUILTINS,
    CLASSIFICATION,
    VarietySpec,
    available,
    builtin,
    builtin_text,
    load_spec,
    resolve,
    serialize,
    to_document,
)
from .suite import SpecContext, SuiteOptions, reconstruction, run_suite, semisimplicity

__all__ = [
    "BUILTINS",
    "CLASSIFICATION",
    "PolyExpr",
    "SpecContext",
    "SuiteOptions",
    "VarietySpec",
    "available",
    "builtin",
    "builtin_text",
    "load_spec",
    "parse_poly",
    "reconstruction",
    "resolve",
    "run_suite",
    "semisimplicity",
    "serialize",
    "to_document",
]
