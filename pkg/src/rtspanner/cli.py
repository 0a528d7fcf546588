"""Command-line interface.

Subcommands: gen, build, verify, stats. Exit codes: 0 success (and, for
verify, stretch certified), 1 stretch violation, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .cover_basic import spanner_basic
from .cover_strong import edge_girths, spanner_strong
from .errors import (
    GraphFormatError,
    InvariantViolation,
    MalformedInputError,
    ParameterError,
    WeightDomainError,
)
from .fileio import RunStats, read_graph_file, write_graph_file, write_json_atomic
from .generate import MODELS, generate
from .graph import Graph
from .verify import verify_size, verify_stretch

_INPUT_ERRORS = (
    GraphFormatError,
    MalformedInputError,
    ParameterError,
    WeightDomainError,
    OSError,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spanner", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a benchmark graph")
    gen.add_argument("--model", required=True, choices=MODELS)
    gen.add_argument("--n", required=True, type=int)
    gen.add_argument("--p", type=float, default=None)
    gen.add_argument("--wmin", type=float, default=1.0)
    gen.add_argument("--wmax", type=float, default=1.0)
    gen.add_argument("--seed", required=True, type=int)
    gen.add_argument("--output", required=True)

    build = sub.add_parser("build", help="build a roundtrip spanner")
    build.add_argument("--input", required=True)
    build.add_argument("--k", required=True, type=int)
    build.add_argument("--algo", required=True, choices=("basic", "strong"))
    build.add_argument("--output", required=True)
    build.add_argument("--stats", default=None)
    build.add_argument("--no-delete-long", action="store_true",
                       help="keep long-girth edges in the contracted quotient")
    build.add_argument("--threads", type=int, default=1)
    build.add_argument("--rescale", action="store_true",
                       help="divide all weights by the minimum when it is below 1")

    ver = sub.add_parser("verify", help="certify a spanner's stretch")
    ver.add_argument("--graph", required=True)
    ver.add_argument("--spanner", required=True)
    ver.add_argument("--k", required=True, type=int)
    ver.add_argument("--stats", default=None)

    stats = sub.add_parser("stats", help="print summary statistics of a graph")
    stats.add_argument("--graph", required=True)
    return parser


def _match_edge_ids(g: Graph, sub: Graph) -> list[int]:
    """Map a subgraph's edges back onto the parent graph's edge ids."""
    if sub.n != g.n:
        raise GraphFormatError(f"spanner has n={sub.n} but graph has n={g.n}")
    pool: dict[tuple[int, int, float], list[int]] = {}
    for eid in range(g.m):
        pool.setdefault(g.edge(eid), []).append(eid)
    for ids in pool.values():
        ids.reverse()  # pop() hands out ascending edge ids
    matched = []
    for eid in range(sub.m):
        triple = sub.edge(eid)
        ids = pool.get(triple)
        if not ids:
            raise GraphFormatError(f"spanner edge {triple} is not an edge of the graph")
        matched.append(ids.pop())
    return matched


def _cmd_gen(args) -> int:
    g = generate(args.model, args.n, p=args.p, wmin=args.wmin, wmax=args.wmax, seed=args.seed)
    write_graph_file(args.output, g)
    print(f"wrote {args.output}: n={g.n} m={g.m} w_max={g.w_max}")
    return 0


def _cmd_build(args) -> int:
    g = read_graph_file(args.input, rescale=args.rescale)
    t0 = time.perf_counter()
    if args.algo == "basic":
        result = spanner_basic(g, args.k, threads=args.threads)
    else:
        result = spanner_strong(
            g, args.k, threads=args.threads, delete_long=not args.no_delete_long
        )
    wall_ms = (time.perf_counter() - t0) * 1000.0
    write_graph_file(args.output, g, result.edges)
    ratio = None
    if g.n >= 2:
        _, ratio = verify_size(g.n, g.w_max, args.k, result.edge_count, args.algo)
    if args.stats:
        stats = RunStats(
            n=g.n, m=g.m, k=args.k, algorithm=args.algo,
            epsilon=result.epsilon, p_iterations=result.p_iterations,
            spanner_edges=result.edge_count, max_stretch=None,
            bound_ratio=ratio, wall_time_ms=wall_ms, seed=None,
        )
        write_json_atomic(args.stats, stats.as_dict())
    print(f"spanner: {result.edge_count}/{g.m} edges kept, stretch bound {2 * args.k - 1}")
    return 0


def _cmd_verify(args) -> int:
    g = read_graph_file(args.graph)
    sub = read_graph_file(args.spanner)
    ids = _match_edge_ids(g, sub)
    bound = 2 * args.k - 1
    t0 = time.perf_counter()
    report = verify_stretch(g, ids, bound)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    if args.stats:
        stats = RunStats(
            n=g.n, m=g.m, k=args.k, algorithm="verify",
            epsilon=None, p_iterations=None,
            spanner_edges=report.spanner_edges, max_stretch=report.max_stretch,
            bound_ratio=None, wall_time_ms=wall_ms, seed=None,
        )
        write_json_atomic(args.stats, stats.as_dict())
    print(
        f"max stretch {report.max_stretch} over {report.finite_pairs} finite pairs "
        f"(bound {bound}, {len(report.violations)} violations)"
    )
    return 0 if report.ok else 1


def _cmd_stats(args) -> int:
    g = read_graph_file(args.graph)
    if g.n:
        adj = coo_matrix(
            (np.ones(g.m), (g.tails, g.heads)), shape=(g.n, g.n)
        ).tocsr()
        scc_count = int(connected_components(adj, directed=True, connection="strong")[0])
    else:
        scc_count = 0
    girths = edge_girths(g)
    finite = [x for x in girths if x != float("inf")]
    payload = {
        "n": g.n,
        "m": g.m,
        "W": g.w_max,
        "scc_count": scc_count,
        "min_girth": min(finite) if finite else None,
        "max_girth": max(finite) if finite else None,
    }
    print(json.dumps(payload))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "gen": _cmd_gen,
        "build": _cmd_build,
        "verify": _cmd_verify,
        "stats": _cmd_stats,
    }[args.command]
    try:
        return handler(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
