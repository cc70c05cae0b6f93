"""Exact computations in the Jordan plane Q<x,y>/(xy - yx - y^2).

Rationals are returned as fractions.Fraction; matrices as lists of rows.
Polynomials use the text grammar of the command-line tool, e.g. "x^2*y - 2*y^2*x".
"""

from ._core import (
    JordanError,
    RepPair,
    alpha_coeff,
    base_point,
    canonical_pair,
    census,
    conjugate,
    decompose,
    dim_bound,
    discover_relations,
    epsilon_rep,
    eval,
    extract_params,
    faithful_witness,
    fiber_dim,
    gs_series_coefficients,
    hilbert_dim,
    ideal_codim,
    image_dim,
    jacobian_rank,
    jordan_overlaps,
    multiply,
    normal_form,
    quiver,
    relation_residual,
    run_cli,
    single_eigenvalue_test,
    x_zero,
)

__all__ = [
    "JordanError",
    "RepPair",
    "alpha_coeff",
    "base_point",
    "canonical_pair",
    "census",
    "conjugate",
    "decompose",
    "dim_bound",
    "discover_relations",
    "epsilon_rep",
    "eval",
    "extract_params",
    "faithful_witness",
    "fiber_dim",
    "gs_series_coefficients",
    "hilbert_dim",
    "ideal_codim",
    "image_dim",
    "jacobian_rank",
    "jordan_overlaps",
    "multiply",
    "normal_form",
    "quiver",
    "relation_residual",
    "run_cli",
    "single_eigenvalue_test",
    "x_zero",
]
