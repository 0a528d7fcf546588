"""Shortest-path primitives: capped Dijkstra, roundtrip distances, balls,
and in/out shortest-path trees.

All searches are deterministic. Ties between equal queue keys pop the
smaller vertex id; among equal-weight parallel edges the lowest edge id
becomes the recorded parent. A ``radius_cap`` prunes the search: a vertex
whose key reaches the cap is not settled and its edges are not relaxed,
so distances are exact for every vertex strictly below the cap and
anything at or beyond it may be reported as unreachable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Collection, Iterable

from .errors import ParameterError
from .graph import Graph, GraphView, resolve_view

INF = math.inf

FORWARD = "forward"
BACKWARD = "backward"
ROUNDTRIP = "roundtrip"


@dataclass
class DistanceMap:
    """Per-source distances, with an explicit infinity for missing keys.

    ``dist`` holds only vertices whose distance is known exactly; query
    through :meth:`distance` to get ``inf`` for the rest. ``parent`` maps
    a vertex to the edge id that reached it in the shortest-path tree
    (sources carry no parent); it is ``None`` for roundtrip maps.
    """

    source: int
    direction: str
    dist: dict[int, float]
    parent: dict[int, int] | None

    def distance(self, v: int) -> float:
        return self.dist.get(v, INF)


def _search(
    g: Graph,
    alive: Collection[int] | None,
    sources: Iterable[int],
    forward: bool,
    cap: float = INF,
    inclusive: bool = False,
) -> tuple[dict[int, float], dict[int, int]]:
    """Deterministic (multi-source) Dijkstra over ``g`` restricted to ``alive``.

    Settles vertices with key < cap (or <= cap when ``inclusive``).
    Returns ({vertex: exact distance}, {vertex: parent edge id}); sources
    are always reported at distance 0 even when the cap stops the search
    immediately.
    """
    adj = g._fwd if forward else g._bwd
    n = g.n
    dist = [INF] * n
    parent = [-1] * n
    done = [False] * n
    src = sorted(set(sources))
    heap = [(0.0, s) for s in src]
    for s in src:
        dist[s] = 0.0
    heapify(heap)
    out_d: dict[int, float] = {}
    while heap:
        d, u = heappop(heap)
        if d > cap or (d == cap and not inclusive):
            break  # heap keys are non-decreasing: nothing left below the cap
        if done[u] or d > dist[u]:
            continue
        done[u] = True
        out_d[u] = d
        for v, w, eid in adj[u]:
            if done[v] or (alive is not None and v not in alive):
                continue
            nd = d + w
            if nd > cap or (nd == cap and not inclusive):
                continue
            if nd < dist[v]:
                dist[v] = nd
                parent[v] = eid
                heappush(heap, (nd, v))
    for s in src:
        out_d.setdefault(s, 0.0)
    out_p = {v: parent[v] for v in out_d if parent[v] >= 0}
    return out_d, out_p


def _check_source(g: Graph, alive: Collection[int] | None, u: int) -> None:
    if not (0 <= u < g.n) or (alive is not None and u not in alive):
        raise ParameterError(f"source vertex {u!r} is not in the view")


def dijkstra(
    view: Graph | GraphView,
    source: int,
    direction: str = FORWARD,
    radius_cap: float = INF,
) -> DistanceMap:
    """One-way shortest-path distances from (or to) ``source``.

    ``direction="backward"`` gives distances *to* the source, i.e. the
    forward search on the reversed graph. ``parent`` encodes a
    shortest-path tree over the settled vertices.
    """
    g, alive = resolve_view(view)
    _check_source(g, alive, source)
    if direction not in (FORWARD, BACKWARD):
        raise ParameterError(f"direction must be forward or backward, got {direction!r}")
    dist, parent = _search(g, alive, [source], direction == FORWARD, radius_cap)
    return DistanceMap(source, direction, dist, parent)


def _roundtrip_parts(
    g: Graph,
    alive: Collection[int] | None,
    u: int,
    cap: float,
    inclusive: bool = False,
):
    """Forward and backward searches from u plus the combined roundtrip map."""
    fd, fp = _search(g, alive, [u], True, cap, inclusive)
    bd, bp = _search(g, alive, [u], False, cap, inclusive)
    rt = {}
    for v, df in fd.items():
        db = bd.get(v)
        if db is not None:
            rt[v] = df + db
    return fd, fp, bd, bp, rt


def roundtrip_from(
    view: Graph | GraphView,
    u: int,
    radius_cap: float = INF,
) -> DistanceMap:
    """Roundtrip distances d(u->v) + d(v->u), exact below ``radius_cap``."""
    g, alive = resolve_view(view)
    _check_source(g, alive, u)
    *_, rt = _roundtrip_parts(g, alive, u, radius_cap)
    return DistanceMap(u, ROUNDTRIP, rt, None)


def ball(view: Graph | GraphView, u: int, radius: float, closed: bool = False) -> set[int]:
    """Roundtrip ball around ``u``: strict < for open, <= for closed.

    Comparisons are exact floating-point comparisons.
    """
    g, alive = resolve_view(view)
    _check_source(g, alive, u)
    if radius < 0:
        raise ParameterError("ball radius must be >= 0")
    *_, rt = _roundtrip_parts(g, alive, u, radius, inclusive=closed)
    if closed:
        return {v for v, d in rt.items() if d <= radius}
    return {v for v, d in rt.items() if d < radius}


def _tree_edges_for_ball(
    members: Collection[int],
    center_like: Collection[int],
    fwd_parent: dict[int, int],
    bwd_parent: dict[int, int],
) -> set[int]:
    """Union of outward and inward tree edges restricted to ball members."""
    edges: set[int] = set()
    for v in members:
        if v in center_like:
            continue
        e = fwd_parent.get(v)
        if e is not None:
            edges.add(e)
        e = bwd_parent.get(v)
        if e is not None:
            edges.add(e)
    return edges


def in_out_trees(view: Graph | GraphView, u: int, radius: float) -> set[int]:
    """Edge ids of shortest-path trees from and to ``u`` over its open ball.

    Every vertex on either tree lies inside the open roundtrip ball, so
    the result has at most 2*(|ball| - 1) edges, and for every ball
    member v it alone realizes d(u->v) and d(v->u).
    """
    g, alive = resolve_view(view)
    _check_source(g, alive, u)
    if radius < 0:
        raise ParameterError("tree radius must be >= 0")
    fd, fp, bd, bp, rt = _roundtrip_parts(g, alive, u, radius)
    members = {v for v, d in rt.items() if d < radius}
    return _tree_edges_for_ball(members, {u}, fp, bp)
