"""Brute-force certification of spanner stretch and size.

This module deliberately does not share code with the construction-side
searches: all-pairs distances come from scipy's compiled Dijkstra, so a
bug in the hand-rolled search machinery cannot hide from the checker.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Collection, Sequence

import numpy as np
from scipy.sparse.csgraph import dijkstra as _csgraph_dijkstra

from .errors import MalformedInputError, ParameterError
from .graph import Graph

INF = math.inf

# Path sums taken along different routes may differ in the last ulps;
# a pair only counts as violating with this much relative headroom.
STRETCH_RTOL = 1e-9


@dataclass
class StretchReport:
    """Outcome of comparing roundtrip distances in a spanner to its graph."""

    max_stretch: float
    argmax_pair: tuple[int, int] | None
    finite_pairs: int
    violations: list[tuple[int, int, float, float]]
    spanner_edges: int
    original_edges: int

    @property
    def ok(self) -> bool:
        return not self.violations


def _roundtrip_matrix(
    n: int, tails: Sequence[int], heads: Sequence[int], weights: Sequence[float]
) -> np.ndarray:
    """All-pairs roundtrip distances for an edge list, via scipy Dijkstra."""
    adj = np.full((n, n), INF)
    if len(tails):
        np.minimum.at(adj, (np.asarray(tails), np.asarray(heads)), np.asarray(weights))
    adj[np.isinf(adj)] = 0.0  # dense csgraph convention: 0 means no edge
    one_way = _csgraph_dijkstra(adj, directed=True)
    return one_way + one_way.T


def all_pairs_roundtrip(g: Graph) -> np.ndarray:
    """n x n matrix of roundtrip distances (inf where no cycle exists).

    Symmetric with a zero diagonal. Memoized on the graph.
    """
    cached = g._cache.get("roundtrip_matrix")
    if cached is None:
        cached = _roundtrip_matrix(g.n, g.tails, g.heads, g.weights)
        g._cache["roundtrip_matrix"] = cached
    return cached


def verify_stretch(g: Graph, spanner: Collection[int], bound: float) -> StretchReport:
    """Check d_H(u<->v) <= bound * d_G(u<->v) for every finite pair.

    ``spanner`` is a set of edge ids of ``g``. Pairs with infinite
    roundtrip distance in ``g`` impose no constraint; a finite pair that
    becomes unreachable in the spanner is reported as infinite stretch.
    """
    ids = sorted(set(spanner))
    if ids and not (0 <= ids[0] and ids[-1] < g.m):
        raise MalformedInputError("spanner contains edge ids outside the graph")
    rt_g = all_pairs_roundtrip(g)
    rt_h = _roundtrip_matrix(
        g.n,
        [g.tails[e] for e in ids],
        [g.heads[e] for e in ids],
        [g.weights[e] for e in ids],
    )
    iu, ju = np.triu_indices(g.n, k=1)
    dg = rt_g[iu, ju]
    dh = rt_h[iu, ju]
    finite = np.isfinite(dg)
    finite_pairs = int(finite.sum())
    if finite_pairs == 0:
        return StretchReport(0.0, None, 0, [], len(ids), g.m)
    with np.errstate(invalid="ignore"):
        ratios = dh[finite] / dg[finite]
    best = int(np.argmax(ratios))
    max_stretch = float(ratios[best])
    fi, fj = iu[finite], ju[finite]
    argmax_pair = (int(fi[best]), int(fj[best]))
    bad = dh[finite] > bound * dg[finite] * (1.0 + STRETCH_RTOL)
    violations = [
        (int(fi[i]), int(fj[i]), float(dg[finite][i]), float(dh[finite][i]))
        for i in np.flatnonzero(bad)
    ]
    return StretchReport(max_stretch, argmax_pair, finite_pairs, violations, len(ids), g.m)


def verify_size(
    n: int, w_max: float, k: int, spanner_edges: int, mode: str
) -> tuple[float, float]:
    """Asymptotic size yardstick and the achieved ratio against it.

    ``mode="basic"`` compares against k * n^(1+1/k) * log2(n * w_max),
    ``mode="strong"`` against k * n^(1+1/k) * log2(n). The ratio is
    advisory (the hidden constants are not pinned down); trend checks
    across instances live in the test suite.
    """
    if n < 2:
        raise ParameterError("size yardstick needs n >= 2")
    if mode == "basic":
        bound = k * n ** (1.0 + 1.0 / k) * math.log2(n * w_max)
    elif mode == "strong":
        bound = k * n ** (1.0 + 1.0 / k) * math.log2(n)
    else:
        raise ParameterError(f"mode must be basic or strong, got {mode!r}")
    return bound, spanner_edges / bound
