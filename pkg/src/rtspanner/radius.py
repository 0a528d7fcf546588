"""Per-vertex ball radii, deterministic greedy hitting sets, and the
hub-tree preprocessing stage.

The radius of a vertex u is the roundtrip distance to its rank-th
nearest vertex (u itself counts at rank 1, distance 0), where the rank
is ceil(n^(1-1/k)). Every closed ball of that radius therefore holds at
least ``rank`` vertices, so a greedy hitting set over those balls stays
small; full in/out shortest-path trees rooted at the chosen hub vertices
serve every vertex pair whose roundtrip distance is large relative to
the radius of either endpoint.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Collection, Sequence

from .errors import ParameterError
from .graph import Graph
from .sssp import INF, _roundtrip_parts, _search


@dataclass
class RadiusMap:
    """Ball radii per vertex for a fixed stretch parameter k.

    ``values[u]`` is the rank-th smallest roundtrip distance from u, or
    inf when fewer than ``rank`` vertices are roundtrip-reachable.
    """

    values: list[float]
    k: int
    rank: int


def rank_threshold(n: int, k: int) -> int:
    """ceil(n^(1-1/k)), snapping floats within 1e-9 of an integer first.

    The snap guards against an off-by-one at perfect powers, where the
    float power can land a hair above or below the exact integer.
    """
    x = n ** (1.0 - 1.0 / k)
    nearest = round(x)
    if abs(x - nearest) <= 1e-9:
        x = nearest
    return max(1, math.ceil(x))


def _map_sources(fn, count: int, threads: int) -> list:
    if threads > 1 and count > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, range(count)))
    return [fn(u) for u in range(count)]


def roundtrip_maps(g: Graph, threads: int = 1) -> list[dict[int, float]]:
    """Full roundtrip distance map from every vertex, memoized on the graph.

    Safe to build concurrently: the computation is idempotent and the
    graph is immutable.
    """
    cached = g._cache.get("roundtrip_maps")
    if cached is not None:
        return cached

    def one(u: int) -> dict[int, float]:
        *_, rt = _roundtrip_parts(g, None, u, INF)
        return rt

    maps = _map_sources(one, g.n, threads)
    g._cache["roundtrip_maps"] = maps
    return maps


def compute_radii(g: Graph, k: int, threads: int = 1) -> RadiusMap:
    """Radius of the rank-threshold ball around every vertex.

    Raises:
        ParameterError: k < 2 (stretch 1 needs no radii; the spanner
            drivers special-case k=1 by keeping every edge).
    """
    if not isinstance(k, int) or k < 2:
        raise ParameterError(f"k must be an integer >= 2, got {k!r}")
    if g.n < 1:
        raise ParameterError("graph needs at least one vertex")
    rank = rank_threshold(g.n, k)
    maps = roundtrip_maps(g, threads)
    values: list[float] = []
    for u in range(g.n):
        finite = sorted(maps[u].values())
        values.append(finite[rank - 1] if len(finite) >= rank else INF)
    return RadiusMap(values, k, rank)


def hitting_set(n: int, sets: Sequence[Collection[int]], p: int) -> set[int]:
    """Greedy hitting set over subsets of 0..n-1, each of size > p >= 1.

    Repeatedly picks the vertex contained in the most not-yet-hit sets
    (ties go to the smallest vertex id). The result has at most
    ceil(n * ln(n) / p) members.
    """
    if p < 1:
        raise ParameterError(f"p must be >= 1, got {p!r}")
    for i, s in enumerate(sets):
        if len(s) <= p:
            raise ParameterError(f"set {i} has size {len(s)} <= p={p}; filter such sets out first")
    chosen: set[int] = set()
    unhit = [set(s) for s in sets]
    while unhit:
        counts: dict[int, int] = {}
        for s in unhit:
            for v in s:
                counts[v] = counts.get(v, 0) + 1
        best = min(counts.items(), key=lambda item: (-item[1], item[0]))[0]
        chosen.add(best)
        unhit = [s for s in unhit if best not in s]
    return chosen


def build_hub_trees(g: Graph, radii: RadiusMap, k: int) -> tuple[set[int], set[int]]:
    """Hitting set over all finite-radius closed balls, plus its tree edges.

    For every hub vertex the full (uncapped) inward and outward
    shortest-path trees of the whole graph are added. Returns
    (tree edge ids, hub vertices). Vertices with infinite radius sit in
    components too small to matter for long pairs and are excluded from
    the ball family.
    """
    if radii.k != k or len(radii.values) != g.n:
        raise ParameterError("radii were computed for a different graph or k")
    maps = roundtrip_maps(g)
    family: list[set[int]] = []
    for u in range(g.n):
        r = radii.values[u]
        if r < INF:
            family.append({v for v, d in maps[u].items() if d <= r})
    if not family:
        return set(), set()
    p = radii.rank - 1
    if p >= 1:
        hubs = hitting_set(g.n, family, p)
    else:
        # rank 1 happens only for n == 1: each ball is the vertex itself
        hubs = {min(s) for s in family}
    edges: set[int] = set()
    for t in sorted(hubs):
        _, fp = _search(g, None, [t], True, INF)
        _, bp = _search(g, None, [t], False, INF)
        edges.update(fp.values())
        edges.update(bp.values())
    return edges, hubs
