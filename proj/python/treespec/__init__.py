"""Exact spectral analysis of trees.

Thin Python layer over the C++ core: exact characteristic polynomials,
eigenvalue location and counting, subdivided-edge structure, exhaustive
enumeration of non-isomorphic trees, and the non-integrality verifier.
"""

from ._core import (
    Tree,
    build_figure_tree,
    canonical_code,
    char_poly,
    count_eigs_interval,
    enumerate_trees,
    longest_subdivided_edge_length,
    parse_tree,
    search_integral_trees,
    spectrum_report,
    subdivided_edges,
    theta_boundary_counts,
    trace_sign_dynamics,
    verify_theorem,
)

__all__ = [
    "Tree",
    "build_figure_tree",
    "canonical_code",
    "char_poly",
    "count_eigs_interval",
    "enumerate_trees",
    "longest_subdivided_edge_length",
    "parse_tree",
    "search_integral_trees",
    "spectrum_report",
    "subdivided_edges",
    "theta_boundary_counts",
    "trace_sign_dynamics",
    "verify_theorem",
]

__version__ = "0.1.0"
