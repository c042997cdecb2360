"""Semigroup determinants and their factorisation."""

import json

from ._core import (
    ParseError,
    PreconditionFailed,
    Semigroup,
    SemidetError,
    count,
    determinant,
    factor,
    scan,
    verify,
)
from ._core import analyze_json as _analyze_json

__all__ = [
    "ParseError",
    "PreconditionFailed",
    "Semigroup",
    "SemidetError",
    "analyze",
    "count",
    "determinant",
    "factor",
    "scan",
    "verify",
]


def analyze(semigroup, name="", max_dim=16):
    """Classification report as a dict."""
    return json.loads(_analyze_json(semigroup, name, max_dim))
