"""Exact 2-domination numbers, vertex-removal stability, and a
verification suite for the published claims about them."""

from .claims import (
    Claim,
    ClaimInstanceResult,
    ClaimReport,
    ClaimSummary,
    SolverDisagreementError,
    SuiteConfig,
    Witness,
    WorkBudget,
    evaluate_claim,
    list_claims,
    pair_panel,
    run_suite,
)
from .families import FAMILIES, generate
from .graph import Graph, GraphError, VertexSet
from .io import Graph6ParseError, parse_graph6, write_dot, write_graph6
from .products import cartesian, corona, has_universal_vertex, join, lexicographic
from .report import render_report
from .solver import (
    DominationResult,
    SearchBudgetExceeded,
    forced_vertices,
    gamma2,
    gamma2_bruteforce,
    is_2_dominating,
)
from .stability import StabilityResult, st, st_bruteforce

__version__ = "0.1.0"

__all__ = [
    "Claim",
    "ClaimInstanceResult",
    "ClaimReport",
    "ClaimSummary",
    "DominationResult",
    "FAMILIES",
    "Graph",
    "Graph6ParseError",
    "GraphError",
    "SearchBudgetExceeded",
    "SolverDisagreementError",
    "StabilityResult",
    "SuiteConfig",
    "VertexSet",
    "Witness",
    "WorkBudget",
    "cartesian",
    "corona",
    "evaluate_claim",
    "forced_vertices",
    "gamma2",
    "gamma2_bruteforce",
    "generate",
    "has_universal_vertex",
    "is_2_dominating",
    "join",
    "lexicographic",
    "list_claims",
    "pair_panel",
    "parse_graph6",
    "render_report",
    "run_suite",
    "st",
    "st_bruteforce",
    "write_dot",
    "write_graph6",
]
