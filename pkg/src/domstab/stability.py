"""Vertex-removal stability of the 2-domination number.

The stability of G is the size of the smallest vertex subset whose
removal changes the 2-domination number. Removal sets are arbitrary
subsets, with no adjacency or connectivity restriction. Both searches
walk removal sizes 1, 2, ... and subsets of one size in lexicographic
order, so the witness is the lexicographically first changing subset of
the minimum size. Termination is guaranteed: deleting all n vertices
drops the number to 0, which differs whenever n >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, VertexSet
from .solver import _Budget, _gamma2_budgeted, gamma2_bruteforce

ST_BRUTEFORCE_MAX_ORDER = 20


@dataclass(frozen=True)
class StabilityResult:
    value: int
    witness: VertexSet
    gamma2_before: int
    gamma2_after: int


def st_bruteforce(g: Graph) -> StabilityResult:
    """Stability by plain enumeration, anchored to the enumeration oracle."""
    n = g.order
    if n == 0:
        raise GraphError("stability is undefined for the empty graph")
    if n > ST_BRUTEFORCE_MAX_ORDER:
        raise GraphError(
            f"order {n} exceeds the stability brute-force guard "
            f"{ST_BRUTEFORCE_MAX_ORDER}"
        )
    before = gamma2_bruteforce(g).value
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            after = gamma2_bruteforce(g.delete_mask(mask)).value
            if after != before:
                return StabilityResult(size, VertexSet(n, mask), before, after)
    raise AssertionError("unreachable: removing all vertices changes the value")


def st(g: Graph, *, max_nodes: int | None = None) -> StabilityResult:
    """Stability via the fast solver; value and witness match st_bruteforce.

    The 2-domination number of the input is computed once and reused for
    every comparison. ``max_nodes`` bounds the total solver nodes spent
    across all subset evaluations (deterministic skip for the claim suite).
    """
    n = g.order
    if n == 0:
        raise GraphError("stability is undefined for the empty graph")
    budget = _Budget(max_nodes)
    before = _gamma2_budgeted(g, budget).value
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            after = _gamma2_budgeted(g.delete_mask(mask), budget).value
            if after != before:
                return StabilityResult(size, VertexSet(n, mask), before, after)
    raise AssertionError("unreachable: removing all vertices changes the value")
