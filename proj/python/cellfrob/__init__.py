"""Exact verification of Frobenius cellular algebras.

Thin JSON-speaking wrapper around the C++ core: builtin fixtures, the full
report pipeline, and the projectivity oracles.  All numeric payloads are
strings ("p/q" rationals or prime-field residues); nothing is ever rounded.
"""

import json as _json

from cellfrob._core import (
    ConsistencyError,
    SpecParseError,
    SpecValidationError,
    builtin,
    oracle,
    report,
    report_text,
    roundtrip,
    validate,
)

__all__ = [
    "ConsistencyError",
    "SpecParseError",
    "SpecValidationError",
    "builtin",
    "builtin_dict",
    "oracle",
    "oracle_dict",
    "report",
    "report_dict",
    "report_text",
    "roundtrip",
    "validate",
    "validate_dict",
]


def report_dict(spec_text):
    """Full pipeline report as a Python dict."""
    return _json.loads(report(spec_text))


def validate_dict(spec_text):
    """Axiom checks only, as a Python dict."""
    return _json.loads(validate(spec_text))


def oracle_dict(spec_text, cell, flavor="C"):
    """Both projectivity oracles on one cell module, as a Python dict."""
    return _json.loads(oracle(spec_text, cell, flavor))


def builtin_dict(name, params=None):
    """Builtin fixture spec as a Python dict."""
    return _json.loads(builtin(name, params or {}))
