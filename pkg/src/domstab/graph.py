"""Immutable simple graphs on vertex labels 0..n-1 with bitmask adjacency.

Neighbor sets are Python ints used as bitmasks, so membership tests and
intersection cardinalities are single ``&`` / ``bit_count`` operations.
That pays off in the exact solvers, whose inner loop is "how many chosen
vertices does v see". All operations return new graphs; instances are
safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid construction input or out-of-domain graph operation."""


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices 0..universe-1, stored as a bitmask."""

    universe: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.universe < 0:
            raise GraphError(f"negative universe {self.universe}")
        if self.mask < 0 or self.mask >> self.universe:
            raise GraphError("vertex set member outside 0..universe-1")

    @classmethod
    def of(cls, universe: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < universe:
                raise GraphError(f"vertex {v} outside universe 0..{universe - 1}")
            mask |= 1 << v
        return cls(universe, mask)

    def members(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.universe and self.mask >> v & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return bit_indices(self.mask)


class Graph:
    """Simple undirected graph; construction validates symmetry and loops."""

    __slots__ = ("_n", "_adj")

    def __init__(self, adjacency: Sequence[int]):
        adj = tuple(adjacency)
        n = len(adj)
        for v, m in enumerate(adj):
            if m < 0 or m >> n:
                raise GraphError(f"neighbor of vertex {v} outside 0..{n - 1}")
            if m >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            rest = m
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self._n = n
        self._adj = adj

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on n vertices from unordered pairs (duplicates collapse)."""
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj = [0] * n
        for pair in edges:
            u, v = pair
            if u == v:
                raise GraphError(f"loop edge {pair!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj)

    # -- basic queries ------------------------------------------------

    @property
    def order(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks."""
        return self._adj

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(m.bit_count() for m in self._adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bit_indices(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return self._adj[u] >> v & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u in range(self._n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            while rest:
                low = rest & -rest
                out.append((u, low.bit_length() - 1))
                rest ^= low
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(order={self._n}, size={self.size})"

    # -- derived graphs -----------------------------------------------

    def delete_mask(self, mask: int) -> "Graph":
        """Induced subgraph on the vertices outside ``mask``.

        Survivors are relabeled compactly in their original order.
        """
        if mask < 0 or mask >> self._n:
            raise GraphError("deletion mask outside 0..n-1")
        keep = self.full_mask & ~mask
        labels = list(bit_indices(keep))
        position = {v: i for i, v in enumerate(labels)}
        adj = []
        for v in labels:
            m = self._adj[v] & keep
            new = 0
            while m:
                low = m & -m
                new |= 1 << position[low.bit_length() - 1]
                m ^= low
            adj.append(new)
        return Graph(adj)

    def delete_vertices(self, s: VertexSet) -> "Graph":
        """Remove the vertices of ``s``; see delete_mask for relabeling."""
        if s.universe != self._n:
            raise GraphError(
                f"vertex set universe {s.universe} does not match order {self._n}"
            )
        return self.delete_mask(s.mask)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph([full & ~self._adj[v] & ~(1 << v) for v in range(self._n)])

    def components(self) -> list[VertexSet]:
        """Connected components, ordered by their smallest vertex."""
        seen = 0
        out = []
        for v in range(self._n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                rest = frontier
                while rest:
                    low = rest & -rest
                    nxt |= self._adj[low.bit_length() - 1]
                    rest ^= low
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(VertexSet(self._n, comp))
        return out

    # -- degree / substructure queries ---------------------------------

    def min_degree(self) -> int:
        if self._n == 0:
            raise GraphError("minimum degree is undefined for the empty graph")
        return min(m.bit_count() for m in self._adj)

    def max_degree(self) -> int:
        if self._n == 0:
            raise GraphError("maximum degree is undefined for the empty graph")
        return max(m.bit_count() for m in self._adj)

    def max_induced_star(self) -> int:
        """Largest t such that some K_{1,t} occurs as an induced subgraph.

        Exhaustive: for every vertex the maximum independent set inside its
        neighborhood is computed by branching. Returns 0 for edgeless graphs.
        """
        if self._n < 2:
            raise GraphError("induced stars need at least two vertices")
        best = 0
        for v in range(self._n):
            if self._adj[v].bit_count() > best:
                best = max(best, _independent_set_size(self._adj, self._adj[v]))
        return best


def _independent_set_size(adj: tuple[int, ...], candidates: int) -> int:
    """Maximum independent set size within the candidate mask."""
    if candidates == 0:
        return 0
    # Branch on a maximum-degree candidate; isolated candidates are free.
    best_v = -1
    best_deg = -1
    rest = candidates
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        d = (adj[v] & candidates).bit_count()
        if d > best_deg:
            best_deg = d
            best_v = v
    if best_deg == 0:
        return candidates.bit_count()
    bit = 1 << best_v
    with_v = 1 + _independent_set_size(adj, candidates & ~adj[best_v] & ~bit)
    without_v = _independent_set_size(adj, candidates ^ bit)
    return with_v if with_v >= without_v else without_v
