"""Directed multigraph with real edge weights in [1, w_max].

Vertices are the integers 0..n-1. Edges are identified by their index in
the edge list (an "edge id"), so parallel edges stay distinguishable and
an edge subset is simply a ``set[int]`` of edge ids. Graphs are immutable
once built; every algorithm in this package treats them as shared
read-only data, which makes concurrent per-source searches safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedInputError, WeightDomainError

INF = math.inf

EdgeTriple = tuple[int, int, float]


class Graph:
    """Immutable directed multigraph.

    Attributes:
        n: number of vertices.
        m: number of edges.
        tails, heads, weights: parallel lists indexed by edge id.
        w_max: maximum edge weight present (1.0 for an empty edge set).
    """

    __slots__ = ("n", "m", "tails", "heads", "weights", "w_max", "_fwd", "_bwd", "_cache")

    def __init__(self, n: int, edges: Iterable[Sequence]):
        if not isinstance(n, int) or n < 0:
            raise MalformedInputError(f"vertex count must be a non-negative integer, got {n!r}")
        tails: list[int] = []
        heads: list[int] = []
        weights: list[float] = []
        for t, h, w in edges:
            if not (isinstance(t, int) and 0 <= t < n):
                raise MalformedInputError(f"edge tail {t!r} outside 0..{n - 1}")
            if not (isinstance(h, int) and 0 <= h < n):
                raise MalformedInputError(f"edge head {h!r} outside 0..{n - 1}")
            w = float(w)
            if math.isnan(w) or math.isinf(w) or w < 1.0:
                raise WeightDomainError(f"edge weight {w!r} outside [1, inf); rescale inputs first")
            tails.append(t)
            heads.append(h)
            weights.append(w)
        self.n = n
        self.m = len(tails)
        self.tails = tails
        self.heads = heads
        self.weights = weights
        self.w_max = max(weights) if weights else 1.0
        # adjacency lists hold (other endpoint, weight, edge id), in edge-id
        # order so that parallel-edge tie-breaking is deterministic
        fwd: list[list[tuple[int, float, int]]] = [[] for _ in range(n)]
        bwd: list[list[tuple[int, float, int]]] = [[] for _ in range(n)]
        for eid in range(self.m):
            t, h, w = tails[eid], heads[eid], weights[eid]
            fwd[t].append((h, w, eid))
            bwd[h].append((t, w, eid))
        self._fwd = fwd
        self._bwd = bwd
        self._cache: dict = {}  # lazy memo for idempotent derived data

    def edge(self, eid: int) -> EdgeTriple:
        return self.tails[eid], self.heads[eid], self.weights[eid]

    def edge_list(self) -> list[EdgeTriple]:
        """All edges as (tail, head, weight) triples in edge-id order."""
        return list(zip(self.tails, self.heads, self.weights))

    def out_edges(self, u: int) -> list[tuple[int, float, int]]:
        return self._fwd[u]

    def in_edges(self, v: int) -> list[tuple[int, float, int]]:
        return self._bwd[v]

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m}, w_max={self.w_max})"


@dataclass(frozen=True)
class GraphView:
    """Read-only induced-subgraph view.

    Traversals skip any edge with an endpoint outside ``members``. No
    copying happens; the view is just the graph plus a membership set.
    """

    graph: Graph
    members: frozenset[int]

    def contains(self, v: int) -> bool:
        return v in self.members


def build_graph(n: int, edges: Iterable[Sequence]) -> Graph:
    """Build an immutable graph from (tail, head, weight) triples.

    Raises:
        MalformedInputError: a vertex id is outside 0..n-1.
        WeightDomainError: a weight is below 1 or not finite.
    """
    return Graph(n, edges)


def induced_view(g: Graph, u_set: Iterable[int]) -> GraphView:
    """View of the subgraph induced by ``u_set``."""
    members = frozenset(u_set)
    for v in members:
        if not (0 <= v < g.n):
            raise MalformedInputError(f"vertex {v!r} outside 0..{g.n - 1}")
    return GraphView(g, members)


def resolve_view(view: Graph | GraphView) -> tuple[Graph, frozenset[int] | None]:
    """Normalize a Graph-or-view argument to (graph, alive-set-or-None)."""
    if isinstance(view, GraphView):
        return view.graph, view.members
    return view, None
