"""Exact tree-independence number, alpha-treedepth, strong brambles and wheel detection."""

from ._core import (
    Graph,
    InvariantViolation,
    ParseError,
    PreconditionError,
    SizeCapError,
    alpha_td,
    alpha_td_certificate,
    alpha_tw,
    alpha_tw_certificate,
    cli,
    clique_number,
    detect_wheel,
    has_induced_minor,
    independence_number,
    is_chordal,
    is_k1d_free,
    is_quasi_threshold,
    path_alpha_td_formula,
    run_suite,
    strong_bramble,
    suite_names,
    treewidth,
)

__all__ = [
    "Graph",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "SizeCapError",
    "alpha_td",
    "alpha_td_certificate",
    "alpha_tw",
    "alpha_tw_certificate",
    "cli",
    "clique_number",
    "detect_wheel",
    "has_induced_minor",
    "independence_number",
    "is_chordal",
    "is_k1d_free",
    "is_quasi_threshold",
    "path_alpha_td_formula",
    "run_suite",
    "strong_bramble",
    "suite_names",
    "treewidth",
]
