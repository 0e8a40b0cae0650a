"""Binary graph operations: join, box and lexicographic products, corona.

Product vertex (a, x) gets the label a * |V(H)| + x. In the corona the
roots keep their labels 0..|V(G)|-1 and the private copy of H attached to
root v occupies |V(G)| + v*|V(H)| .. |V(G)| + (v+1)*|V(H)| - 1.
"""

from __future__ import annotations

from .graph import Graph, GraphError, bit_indices


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    ng, nh = g.order, h.order
    h_all = ((1 << nh) - 1) << ng
    g_all = (1 << ng) - 1
    adj = [g.adjacency[v] | h_all for v in range(ng)]
    adj += [(h.adjacency[x] << ng) | g_all for x in range(nh)]
    return Graph(adj)


def cartesian(g: Graph, h: Graph) -> Graph:
    """Box product: (a,x) ~ (b,y) iff a=b and x~y, or x=y and a~b."""
    nh = h.order
    adj = []
    for a in range(g.order):
        row = 0
        for b in bit_indices(g.adjacency[a]):
            row |= 1 << (b * nh)
        base = a * nh
        for x in range(nh):
            adj.append((h.adjacency[x] << base) | (row << x))
    return Graph(adj)


def lexicographic(g: Graph, h: Graph) -> Graph:
    """Composition G[H]: a copy of H substituted for every vertex of G."""
    nh = h.order
    block = (1 << nh) - 1
    adj = []
    for a in range(g.order):
        cross = 0
        for b in bit_indices(g.adjacency[a]):
            cross |= block << (b * nh)
        base = a * nh
        for x in range(nh):
            adj.append((h.adjacency[x] << base) | cross)
    return Graph(adj)


def corona(g: Graph, h: Graph) -> Graph:
    """One private copy of H per vertex of G, joined fully to that vertex."""
    ng, nh = g.order, h.order
    if ng == 0 or nh == 0:
        raise GraphError("corona requires nonempty operands")
    block = (1 << nh) - 1
    adj = []
    for v in range(ng):
        adj.append(g.adjacency[v] | (block << (ng + v * nh)))
    for v in range(ng):
        base = ng + v * nh
        for x in range(nh):
            adj.append((h.adjacency[x] << base) | (1 << v))
    return Graph(adj)


def has_universal_vertex(g: Graph) -> bool:
    """True iff some vertex is adjacent to all others.

    The one-vertex graph counts: its sole vertex is vacuously adjacent to
    all zero others.
    """
    if g.order == 0:
        raise GraphError("universal vertex is undefined for the empty graph")
    return any(m.bit_count() == g.order - 1 for m in g.adjacency)
