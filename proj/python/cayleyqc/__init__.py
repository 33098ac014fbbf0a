"""Cayley-graph CSS codes: parameters, pseudo-borders and distance bounds."""

import json

from ._core import (
    CayleyQCError,
    ParseError,
    ResourceError,
    ValidationError,
    classical_distance,
    default_seed,
    is_self_orthogonal,
    is_t_pseudo_border,
    kernel_basis,
    parse_matrix,
    rank,
    run_cli,
)
from . import _core

__all__ = [
    "CayleyQCError",
    "ParseError",
    "ResourceError",
    "ValidationError",
    "analyze",
    "bound",
    "classical_distance",
    "default_seed",
    "is_self_orthogonal",
    "is_t_pseudo_border",
    "kernel_basis",
    "minimal_t_pseudo_border",
    "parse_matrix",
    "rank",
    "run_cli",
    "verify",
]


def _as_rows(h):
    if isinstance(h, str):
        return parse_matrix(h)
    return [[int(c) for c in row] for row in h]


def analyze(h, cap=None):
    """[[N, K, D]] report for the code built from parity-check matrix h.

    h is a list of 0/1 rows, a list of '0101' strings, or matrix text.
    """
    return json.loads(_core._analyze(_as_rows(h), cap))


def minimal_t_pseudo_border(n, t, cap=None):
    return json.loads(_core._minimal_t_pseudo_border(n, t, cap))


def bound(formula, n, param=0):
    """formula: theorem, corollary, lemma-k-layer, simple or stirling-floor."""
    return json.loads(_core._bound(formula, n, param))


def verify(suite, seed=default_seed):
    return json.loads(_core._verify(suite, seed))
