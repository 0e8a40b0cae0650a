"""Deterministic generators for the named graph families.

Every builder fixes an explicit labeling (documented per builder) so that
downstream witnesses and graph6 strings are reproducible byte for byte.
Family names double as the CLI-facing identifiers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import Graph, GraphError


def _path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0."""
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _star(leaves: int) -> Graph:
    """Hub 0 with leaves 1..leaves (order leaves + 1)."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _complete_bipartite(m: int, n: int) -> Graph:
    """Parts 0..m-1 and m..m+n-1."""
    return Graph.from_edges(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def _wheel_rim_edges(n: int) -> list[tuple[int, int]]:
    # Rim vertices are 1..n-1; matches join(K1, cycle(n-1)) vertex for vertex.
    return [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]


def _wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n-1 (order n)."""
    edges = [(0, i) for i in range(1, n)] + _wheel_rim_edges(n)
    return Graph.from_edges(n, edges)


def _friendship(n: int) -> Graph:
    """Hub 0; triangle i uses vertices 2i-1 and 2i (order 2n+1)."""
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * n + 1, edges)


def _book(n: int) -> Graph:
    """Spine hubs 0,1; page i adds 2i adjacent to 0 and 2i+1 adjacent to 1,
    plus the outer edge 2i--2i+1 (order 2n+2).

    Identical, vertex for vertex, to the box product of the star with n
    leaves and a single edge.
    """
    edges = [(0, 1)]
    for i in range(1, n + 1):
        u, w = 2 * i, 2 * i + 1
        edges += [(0, u), (1, w), (u, w)]
    return Graph.from_edges(2 * n + 2, edges)


def _helm(n: int) -> Graph:
    """Wheel of order n with one pendant per rim vertex (order 2n-1).

    The pendant of rim vertex i is n-1+i.
    """
    edges = [(0, i) for i in range(1, n)] + _wheel_rim_edges(n)
    edges += [(i, n - 1 + i) for i in range(1, n)]
    return Graph.from_edges(2 * n - 1, edges)


def _subdivided_wheel(n: int) -> Graph:
    """Wheel of order n with every rim edge subdivided once (order 2n-1).

    The subdivision vertex of the i-th rim edge is n-1+i, with rim edges
    numbered (1,2), ..., (n-2,n-1), (1,n-1).
    """
    edges = [(0, i) for i in range(1, n)]
    for idx, (a, b) in enumerate(_wheel_rim_edges(n), start=1):
        s = n - 1 + idx
        edges += [(a, s), (s, b)]
    return Graph.from_edges(2 * n - 1, edges)


def _tri_chain(n: int) -> Graph:
    """Chain of n triangles: spine 0..n, apex of triangle i is n+i.

    Triangle i spans spine vertices i-1, i and its apex (order 2n+1,
    size 3n). Internal spine vertices are the cut vertices.
    """
    edges = []
    for i in range(1, n + 1):
        a, b, apex = i - 1, i, n + i
        edges += [(a, b), (a, apex), (b, apex)]
    return Graph.from_edges(2 * n + 1, edges)


def _para_chain(n: int) -> Graph:
    """Chain of n squares attached at opposite vertices.

    Square i is the 4-cycle (i-1)-x-i-y-(i-1) with x = n+2i-1 and
    y = n+2i; consecutive squares share the spine vertex i (order 3n+1,
    size 4n). The spine vertices 0..n are pairwise nonadjacent.
    """
    edges = []
    for i in range(1, n + 1):
        a, b = i - 1, i
        x, y = n + 2 * i - 1, n + 2 * i
        edges += [(a, x), (x, b), (b, y), (y, a)]
    return Graph.from_edges(3 * n + 1, edges)


def _ortho_chain(n: int) -> Graph:
    """Chain of n squares attached at adjacent vertices.

    Square i is the 4-cycle (i-1)-i-x-y-(i-1) with x = n+2i-1 and
    y = n+2i, so the shared spine vertices i-1, i are adjacent
    (order 3n+1, size 4n).
    """
    edges = []
    for i in range(1, n + 1):
        a, b = i - 1, i
        x, y = n + 2 * i - 1, n + 2 * i
        edges += [(a, b), (b, x), (x, y), (y, a)]
    return Graph.from_edges(3 * n + 1, edges)


@dataclass(frozen=True)
class Family:
    name: str
    arity: int
    minima: tuple[int, ...]
    build: Callable[..., Graph]


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family("path", 1, (1,), _path),
        Family("cycle", 1, (3,), _cycle),
        Family("complete", 1, (1,), _complete),
        Family("star", 1, (1,), _star),
        Family("complete_bipartite", 2, (1, 1), _complete_bipartite),
        Family("wheel", 1, (4,), _wheel),
        Family("friendship", 1, (1,), _friendship),
        Family("book", 1, (1,), _book),
        Family("helm", 1, (4,), _helm),
        Family("subdivided_wheel", 1, (4,), _subdivided_wheel),
        Family("tri_chain", 1, (1,), _tri_chain),
        Family("para_chain", 1, (1,), _para_chain),
        Family("ortho_chain", 1, (1,), _ortho_chain),
    )
}


def generate(family: str, *params: int) -> Graph:
    """Build a family member; parameters below the validity range are errors."""
    try:
        fam = FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown family '{family}'") from None
    if len(params) != fam.arity:
        raise GraphError(
            f"family '{family}' takes {fam.arity} parameter(s), got {len(params)}"
        )
    for value, lo in zip(params, fam.minima):
        if value < lo:
            raise GraphError(
                f"family '{family}' requires parameters >= {lo}, got {value}"
            )
    return fam.build(*params)
