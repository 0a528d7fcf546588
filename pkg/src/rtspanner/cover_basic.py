"""Ball-growing cover pass and the distance-scaled spanner driver.

One cover pass handles a single distance scale: it repeatedly takes the
remaining vertex with the largest ball radius, grows a roundtrip ball
around it in steps until the ball is sparse relative to n^(h/k), keeps
the in/out shortest-path trees over that ball, and removes the closed
ball one step smaller. The driver sweeps geometric distance scales from
1 up to 2*n*w_max and unions all passes with the hub trees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import InvariantViolation, ParameterError
from .graph import Graph
from .radius import RadiusMap, build_hub_trees, compute_radii
from .sssp import INF, _roundtrip_parts, _tree_edges_for_ball

# (center, step, h, ball size, vertices removed)
IterationRecord = tuple[int, float, int, int, int]


@dataclass
class CoverTrace:
    """Audit log of one cover pass, for invariant checks and stats."""

    iterations: list[IterationRecord] = field(default_factory=list)
    edges_added: int = 0


@dataclass
class SpannerResult:
    """A spanner edge set plus the run parameters that produced it."""

    edges: set[int]
    k: int
    epsilon: float | None
    p_iterations: int
    edge_count: int
    traces: list[CoverTrace]

    def trace_summary(self) -> dict:
        its = [rec for tr in self.traces for rec in tr.iterations]
        return {
            "cover_calls": len(self.traces),
            "iterations": len(its),
            "max_h": max((rec[2] for rec in its), default=0),
            "edges_via_covers": sum(tr.edges_added for tr in self.traces),
        }


def select_step_count(ball_size_at: Callable[[int], int], n: int, k: int) -> int:
    """Least h >= 1 with ball_size_at(h) < n**(h/k).

    ``ball_size_at`` must be non-decreasing and bounded by n, which
    guarantees termination by h = k+1 for n >= 2 (n**(h/k) > n there).
    """
    h = 1
    while True:
        if ball_size_at(h) < n ** (h / k):
            return h
        h += 1
        if h > k + 1:
            raise InvariantViolation("ball growth did not thin out by h = k + 1")


def _cover_loop(
    g: Graph,
    alive: set[int],
    radii: RadiusMap,
    k: int,
    scale: float,
    trace: CoverTrace,
    edges: set[int],
) -> None:
    """Run the ball-growing loop on ``alive`` until it empties.

    Mutates ``alive``, ``edges`` and ``trace`` in place.
    """
    n = g.n
    values = radii.values
    while alive:
        u = max(alive, key=lambda v: (values[v], -v))
        ru = values[u]
        step = scale if ru == INF else min(ru / (k - 1), scale)

        def radius_at(h: int) -> float:
            # (k-1) * (ru / (k-1)) can round a few ulps past ru, letting the
            # rank-threshold vertex (at exactly ru) into the open ball and
            # voiding the h <= k-1 guarantee; clamp to the exact-real bound
            r = h * step
            return r if ru == INF else min(r, ru)

        searches: dict[int, tuple] = {}

        def ball_size_at(h: int) -> int:
            r = radius_at(h)
            parts = _roundtrip_parts(g, alive, u, r)
            searches[h] = (r, parts)
            return sum(1 for d in parts[4].values() if d < r)

        h = select_step_count(ball_size_at, n, k)
        if h > k - 1:
            raise InvariantViolation(f"ball growth exponent h={h} exceeded k-1={k - 1}")
        radius, (_, fp, _, bp, rt) = searches[h]
        members = {v for v, d in rt.items() if d < radius}
        new_edges = _tree_edges_for_ball(members, {u}, fp, bp)
        removed = {v for v, d in rt.items() if d <= (h - 1) * step}
        removed.add(u)
        if len(new_edges) > 2 * max(0, len(members) - 1):
            raise InvariantViolation("tree kept more than 2*(|ball|-1) edges")
        if not len(members) < n ** (1.0 / k) * len(removed):
            raise InvariantViolation("grown ball not sparse relative to the removed ball")
        edges |= new_edges
        alive -= removed
        trace.iterations.append((u, step, h, len(members), len(removed)))


def cover_scale(
    g: Graph, radii: RadiusMap, k: int, scale: float
) -> tuple[set[int], CoverTrace]:
    """One cover pass over the whole vertex set at a given distance scale.

    Together with the hub trees, the returned edges approximate every
    vertex pair whose roundtrip distance falls just below ``scale``
    within stretch 2k-1.
    """
    if not isinstance(k, int) or k < 2:
        raise ParameterError(f"k must be an integer >= 2, got {k!r}")
    if not scale > 0:
        raise ParameterError("scale must be positive")
    if radii.k != k or len(radii.values) != g.n:
        raise ParameterError("radii were computed for a different graph or k")
    edges: set[int] = set()
    trace = CoverTrace()
    alive = set(range(g.n))
    _cover_loop(g, alive, radii, k, scale, trace, edges)
    trace.edges_added = len(edges)
    return edges, trace


def scale_count(n: int, w_max: float, epsilon: float) -> int:
    """Number of geometric scales needed to cover distances in [1, 2*n*w_max)."""
    return math.floor(math.log(2.0 * n * w_max) / math.log(1.0 + epsilon)) + 2


def spanner_basic(g: Graph, k: int, threads: int = 1) -> SpannerResult:
    """Roundtrip spanner with stretch 2k-1 and O(k n^(1+1/k) log(n*w_max)) edges.

    k = 1 returns every edge. Otherwise runs the hub-tree preprocessing,
    then one cover pass per geometric scale (1+eps)^p with
    eps = 1/(2k-2), and unions everything.
    """
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be an integer >= 1, got {k!r}")
    if k == 1:
        return SpannerResult(set(range(g.m)), 1, None, 0, g.m, [])
    radii = compute_radii(g, k, threads=threads)
    edges, _hubs = build_hub_trees(g, radii, k)
    eps = 1.0 / (2 * k - 2)
    passes = scale_count(g.n, g.w_max, eps)
    traces: list[CoverTrace] = []
    for p in range(passes):
        got, tr = cover_scale(g, radii, k, (1.0 + eps) ** p)
        edges |= got
        traces.append(tr)
    return SpannerResult(edges, k, eps, passes, len(edges), traces)
