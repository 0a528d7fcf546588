"""Deterministic graph generators for benchmarks and tests.

All models draw from a counter-based Philox generator, keyed by the seed
and a per-model tag, with the weight stream split off via ``jumped`` so
a model's topology and weights never share draws. The same
(model, params, seed) always yields the same graph, on any machine.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ParameterError
from .graph import Graph, build_graph

MODELS = ("gnp-bidirected", "gnp-directed", "cycle", "layered", "grid-torus")

_MODEL_TAG = {name: i + 1 for i, name in enumerate(MODELS)}


def _streams(model: str, seed: int):
    bits = np.random.Philox(key=(int(seed) << 8) + _MODEL_TAG[model])
    topology = np.random.Generator(bits)
    weights = np.random.Generator(bits.jumped(1))
    return topology, weights


def _check_weights(wmin: float, wmax: float) -> None:
    if not (math.isfinite(wmin) and math.isfinite(wmax) and 1.0 <= wmin <= wmax):
        raise ParameterError(f"need 1 <= wmin <= wmax, got [{wmin}, {wmax}]")


def _check_p(p: float | None) -> float:
    if p is None:
        raise ParameterError("this model needs an edge probability p")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must be in [0, 1], got {p}")
    return p


def generate(
    model: str,
    n: int,
    p: float | None = None,
    wmin: float = 1.0,
    wmax: float = 1.0,
    seed: int = 0,
) -> Graph:
    """Generate a graph from one of the named models.

    Models:
        gnp-bidirected: each unordered pair appears with probability p as
            two opposite directed edges with independent weights.
        gnp-directed: each ordered pair appears independently with
            probability p.
        cycle: the single directed cycle 0 -> 1 -> ... -> n-1 -> 0.
        layered: ceil(sqrt(n)) layers arranged in a ring; each forward
            pair between consecutive layers appears with probability p.
        grid-torus: n = s*s vertices with wrap-around edges to the right
            and downward neighbor (strongly connected, out-degree 2).

    Weights are drawn uniformly from [wmin, wmax] (constant when equal).
    """
    if model not in MODELS:
        raise ParameterError(f"unknown model {model!r}; choose from {MODELS}")
    if n < 1:
        raise ParameterError("n must be >= 1")
    _check_weights(wmin, wmax)
    topology, weights = _streams(model, seed)

    def draw_weights(count: int) -> np.ndarray:
        return weights.uniform(wmin, wmax, size=count)

    triples: list[tuple[int, int, float]] = []

    if model == "gnp-bidirected":
        prob = _check_p(p)
        ii, jj = np.triu_indices(n, k=1)
        mask = topology.random(len(ii)) < prob
        pairs = list(zip(ii[mask].tolist(), jj[mask].tolist()))
        ws = draw_weights(2 * len(pairs))
        for idx, (i, j) in enumerate(pairs):
            triples.append((i, j, float(ws[2 * idx])))
            triples.append((j, i, float(ws[2 * idx + 1])))

    elif model == "gnp-directed":
        prob = _check_p(p)
        ii, jj = np.nonzero(~np.eye(n, dtype=bool))
        mask = topology.random(len(ii)) < prob
        chosen = list(zip(ii[mask].tolist(), jj[mask].tolist()))
        ws = draw_weights(len(chosen))
        for idx, (i, j) in enumerate(chosen):
            triples.append((i, j, float(ws[idx])))

    elif model == "cycle":
        ws = draw_weights(n)
        for i in range(n):
            triples.append((i, (i + 1) % n, float(ws[i])))

    elif model == "layered":
        prob = _check_p(p)
        layer_count = max(2, math.ceil(math.sqrt(n)))
        layers = [list(range(n))[i::layer_count] for i in range(layer_count)]
        layers = [lay for lay in layers if lay]
        candidates = []
        for li in range(len(layers)):
            nxt = layers[(li + 1) % len(layers)]
            for a in layers[li]:
                for b in nxt:
                    candidates.append((a, b))
        mask = topology.random(len(candidates)) < prob
        chosen = [pair for pair, keep in zip(candidates, mask.tolist()) if keep]
        ws = draw_weights(len(chosen))
        for idx, (a, b) in enumerate(chosen):
            triples.append((a, b, float(ws[idx])))

    elif model == "grid-torus":
        side = math.isqrt(n)
        if side * side != n:
            raise ParameterError(f"grid-torus needs a square n, got {n}")
        ws = draw_weights(2 * n)
        idx = 0
        for r in range(side):
            for c in range(side):
                v = r * side + c
                right = r * side + (c + 1) % side
                down = ((r + 1) % side) * side + c
                triples.append((v, right, float(ws[idx])))
                triples.append((v, down, float(ws[idx + 1])))
                idx += 2

    return build_graph(n, triples)
