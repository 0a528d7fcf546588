"""Graph file format and JSON run statistics.

The text format is deliberately minimal and diff-friendly:

    n m
    tail head weight        (m lines, 0-indexed vertex ids)

Weights are written with ``repr`` so a parse of a write reproduces every
float bit-exactly. Stats files are single JSON objects written
atomically (temp file + rename).
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import asdict, dataclass
from typing import Collection, Iterable, TextIO

from .errors import GraphFormatError
from .graph import Graph, build_graph


def parse_graph(source: str | TextIO, rescale: bool = False) -> Graph:
    """Parse the text format into a graph.

    With ``rescale``, weights are divided by the minimum weight whenever
    that minimum is below 1, instead of rejecting the file.

    Raises:
        GraphFormatError: malformed header or edge line; the message
            names the offending 1-based line number.
    """
    text = source if isinstance(source, str) else source.read()
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphFormatError("line 1: missing 'n m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"line 1: header needs exactly 2 tokens, got {len(head)}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError("line 1: header tokens must be integers") from None
    if n < 0 or m < 0:
        raise GraphFormatError("line 1: n and m must be non-negative")
    triples: list[tuple[int, int, float]] = []
    lineno = 1
    for raw in lines[1:]:
        if not raw.strip():
            continue  # blank lines are tolerated anywhere after the header
        lineno += 1
        if len(triples) == m:
            raise GraphFormatError(f"line {lineno}: more edge lines than the declared m={m}")
        toks = raw.split()
        if len(toks) != 3:
            raise GraphFormatError(f"line {lineno}: edge needs exactly 3 tokens, got {len(toks)}")
        try:
            t, h = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: vertex ids must be integers") from None
        if not (0 <= t < n and 0 <= h < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        try:
            w = float(toks[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-numeric weight {toks[2]!r}") from None
        if math.isnan(w) or math.isinf(w) or w <= 0.0:
            raise GraphFormatError(f"line {lineno}: weight {toks[2]} outside (0, inf)")
        triples.append((t, h, w))
    if len(triples) != m:
        raise GraphFormatError(f"header declared m={m} edges but file has {len(triples)}")
    if triples:
        w_min = min(w for *_, w in triples)
        if w_min < 1.0:
            if not rescale:
                raise GraphFormatError(
                    f"minimum weight {w_min} is below 1; rerun with rescaling enabled"
                )
            triples = [(t, h, w / w_min) for t, h, w in triples]
    return build_graph(n, triples)


def write_graph(g: Graph, edge_set: Collection[int] | None = None) -> str:
    """Serialize a graph, or just a subset of its edges, to the text format.

    With an edge set, only those edges are written (in ascending edge-id
    order) under the original vertex count and an updated m.
    """
    ids: Iterable[int] = range(g.m) if edge_set is None else sorted(edge_set)
    rows = [f"{g.tails[e]} {g.heads[e]} {g.weights[e]!r}" for e in ids]
    header = f"{g.n} {len(rows)}"
    return "\n".join([header, *rows]) + "\n"


def read_graph_file(path: str, rescale: bool = False) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh, rescale=rescale)


def write_graph_file(path: str, g: Graph, edge_set: Collection[int] | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_graph(g, edge_set))


@dataclass
class RunStats:
    """One JSON object summarizing a build or verify run.

    Non-applicable or non-finite numeric fields serialize as null so the
    schema never carries inf/nan.
    """

    n: int
    m: int
    k: int
    algorithm: str
    epsilon: float | None
    p_iterations: int | None
    spanner_edges: int
    max_stretch: float | None
    bound_ratio: float | None
    wall_time_ms: float
    seed: int | None

    def as_dict(self) -> dict:
        out = {}
        for key, value in asdict(self).items():
            if isinstance(value, float) and not math.isfinite(value):
                value = None
            out[key] = value
        return out


def write_json_atomic(path: str, payload: dict) -> None:
    """Write JSON via a temp file in the target directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
