"""Weight-independent spanner: edge girths, girth-threshold contraction,
and the two-phase cover pass.

At a distance scale L, edges lying on very short cycles (girth at most
L/n^3) are contracted into supervertices; roundtrip balls are then grown
in the quotient, where entering and leaving a component is free because
the searches start from and return to the whole component. The
within-component slack this introduces is at most n * L/n^3 = L/n^2 and
is absorbed by making the step slightly larger than L. Vertices whose
ball radius is small relative to L are handled by the plain cover loop
(or by earlier scales), which keeps the total size independent of the
maximum edge weight.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Collection

from .cover_basic import (
    CoverTrace,
    SpannerResult,
    _cover_loop,
    scale_count,
    select_step_count,
    spanner_basic,
)
from .errors import InvariantViolation, ParameterError
from .graph import Graph
from .radius import RadiusMap, build_hub_trees, compute_radii
from .sssp import INF, _search


def edge_girths(g: Graph, threads: int = 1) -> list[float]:
    """Length of the shortest directed cycle through each edge.

    For an edge (u, v, w) this is w plus the distance from v back to u,
    or inf when no return path exists (self-loops give their own weight).
    Computed with one backward search per distinct tail; memoized on the
    graph.
    """
    cached = g._cache.get("girths")
    if cached is not None:
        return cached
    by_tail: dict[int, list[int]] = {}
    for eid in range(g.m):
        by_tail.setdefault(g.tails[eid], []).append(eid)
    tails = sorted(by_tail)

    def one(i: int) -> dict[int, float]:
        dist, _ = _search(g, None, [tails[i]], False, INF)
        return dist

    if threads > 1 and len(tails) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            dists = list(pool.map(one, range(len(tails))))
    else:
        dists = [one(i) for i in range(len(tails))]
    girths = [INF] * g.m
    for i, u in enumerate(tails):
        back = dists[i]  # back[x] = d(x -> u)
        for eid in by_tail[u]:
            girths[eid] = g.weights[eid] + back.get(g.heads[eid], INF)
    g._cache["girths"] = girths
    return girths


@dataclass
class ContractedGraph:
    """Quotient of the vertex set under short-cycle contraction.

    ``component_of[v]`` maps an original vertex to its supervertex id;
    ``members[c]`` is the vertex set of supervertex c. ``super_edges``
    lists (super tail, super head, weight, original edge id) for edges
    whose girth lies in (contract threshold, delete threshold] and whose
    endpoints land in different components; edges with infinite girth lie
    on no cycle and are always dropped.
    """

    component_of: list[int]
    members: list[set[int]]
    super_edges: list[tuple[int, int, float, int]]


def contract_by_girth(
    g: Graph,
    girths: list[float],
    contract_below: float,
    delete_above: float,
) -> ContractedGraph:
    """Contract edges with girth <= contract_below; filter the rest by window.

    Components are the connected components of the undirected graph on
    the contracted edges. Supervertex ids are assigned in order of each
    component's smallest member, so the quotient is deterministic.
    """
    if contract_below > delete_above:
        raise ParameterError("contract threshold must not exceed delete threshold")
    n = g.n
    root = list(range(n))

    def find(x: int) -> int:
        r = x
        while root[r] != r:
            r = root[r]
        while root[x] != r:
            root[x], x = r, root[x]
        return r

    for eid in range(g.m):
        if girths[eid] <= contract_below:
            a, b = find(g.tails[eid]), find(g.heads[eid])
            if a != b:
                if b < a:
                    a, b = b, a
                root[b] = a
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    component_of = [0] * n
    members: list[set[int]] = []
    for cid, r in enumerate(sorted(groups)):  # roots are minimal members
        for v in groups[r]:
            component_of[v] = cid
        members.append(set(groups[r]))
    super_edges: list[tuple[int, int, float, int]] = []
    for eid in range(g.m):
        gv = girths[eid]
        if gv == INF or gv <= contract_below or gv > delete_above:
            continue
        a, b = component_of[g.tails[eid]], component_of[g.heads[eid]]
        if a != b:
            super_edges.append((a, b, g.weights[eid], eid))
    return ContractedGraph(component_of, members, super_edges)


def _component_search(
    g: Graph,
    alive: Collection[int] | None,
    cg: ContractedGraph,
    sv: int,
    cap: float,
):
    """Multi-source forward and multi-sink backward searches from component sv.

    Returns (fwd dist, fwd parent, bwd dist, bwd parent, dhat, witness)
    where dhat[c] is the cheapest leave-and-return roundtrip between the
    source component and component c (possibly exiting and re-entering the
    source component through different members), and witness[c] attains it.
    """
    sources = sorted(v for v in cg.members[sv] if alive is None or v in alive)
    if not sources:
        raise ParameterError(f"component {sv} has no members in the view")
    fd, fp = _search(g, alive, sources, True, cap)
    bd, bp = _search(g, alive, sources, False, cap)
    comp = cg.component_of
    dhat: dict[int, float] = {}
    witness: dict[int, int] = {}
    for v, df in fd.items():
        db = bd.get(v)
        if db is None:
            continue
        s = df + db
        c = comp[v]
        cur = dhat.get(c)
        if cur is None or s < cur or (s == cur and v < witness[c]):
            dhat[c] = s
            witness[c] = v
    return fd, fp, bd, bp, dhat, witness


def component_roundtrip_from(
    g: Graph,
    u_alive: Collection[int] | None,
    cg: ContractedGraph,
    sv: int,
    radius_cap: float,
) -> dict[int, float]:
    """Roundtrip distance surrogate per supervertex, exact below the cap.

    The surrogate never exceeds the true minimum member-pair roundtrip
    distance, and undershoots it by at most the intra-component roundtrip
    diameter of the source component (n * contract threshold when the
    contraction cycles are intact).
    """
    *_, dhat, _ = _component_search(g, u_alive, cg, sv, radius_cap)
    return dhat


def _quotient_trees(
    g: Graph,
    cg: ContractedGraph,
    sv: int,
    fp: dict[int, int],
    bp: dict[int, int],
    dhat: dict[int, float],
    witness: dict[int, int],
    radius: float,
) -> set[int]:
    """Tree edges between components reaching every ball supervertex.

    Walks each ball component's witness path toward the sources, then
    keeps at most one entering edge (outward tree) and one leaving edge
    (inward tree) per component, offering edges source-side first so the
    kept set stays connected down to every ball component. Walks are
    processed in increasing (distance, witness) order, so the survivor
    for a component sits on the tree path of the closest witness passing
    through it.
    """
    comp = cg.component_of
    tails, heads = g.tails, g.heads
    in_ball = sorted(
        (d, witness[c], c) for c, d in dhat.items() if d < radius and c != sv
    )
    kept_in: dict[int, int] = {}
    kept_out: dict[int, int] = {}
    seen_f: set[int] = set()
    seen_b: set[int] = set()

    def climb(v0: int, parents: dict[int, int], via_tail: bool, seen: set[int]) -> list[int]:
        crossings = []
        v = v0
        while v not in seen:
            seen.add(v)
            e = parents.get(v)
            if e is None:
                break
            if comp[tails[e]] != comp[heads[e]]:
                crossings.append(e)
            v = tails[e] if via_tail else heads[e]
        return crossings

    for _, w, _c in in_ball:
        # outward tree: parent edges point from tail toward the witness
        for e in reversed(climb(w, fp, True, seen_f)):
            kept_in.setdefault(comp[heads[e]], e)
        # inward tree: each vertex's edge leaves it toward the sinks
        for e in reversed(climb(w, bp, False, seen_b)):
            kept_out.setdefault(comp[tails[e]], e)
    return set(kept_in.values()) | set(kept_out.values())


def component_in_out_trees(
    g: Graph,
    u_alive: Collection[int] | None,
    cg: ContractedGraph,
    sv: int,
    radius: float,
) -> set[int]:
    """In/out tree edges over the quotient roundtrip ball around ``sv``.

    Edges internal to a component are dropped; per ball component at most
    one entering and one leaving edge survive, so the result has at most
    2 * (#components with surrogate distance < radius) edges. Collapsing
    every component to a point, the kept edges realize roundtrip paths of
    length below 2 * radius between ``sv`` and every ball component.
    """
    if radius < 0:
        raise ParameterError("tree radius must be >= 0")
    _, fp, _, bp, dhat, witness = _component_search(g, u_alive, cg, sv, radius)
    return _quotient_trees(g, cg, sv, fp, bp, dhat, witness, radius)


def cover_scale_contracted(
    g: Graph,
    radii: RadiusMap,
    girths: list[float],
    k: int,
    p: int,
    epsilon: float,
    delete_long: bool = True,
) -> tuple[set[int], CoverTrace]:
    """Two-phase cover pass at scale L = (1+epsilon)^p.

    Phase 1 serves vertices with radius >= 2(k-1)L on the quotient graph
    contracted at girth L/n^3, using a step of (1 + 1/n^2)L to absorb the
    contraction slack. Vertices with radius below L/8 are then dropped
    (an earlier scale or the hub trees already serve them), and the plain
    ball-growing loop finishes the rest on the uncontracted subgraph.
    """
    if not isinstance(k, int) or k < 2:
        raise ParameterError(f"k must be an integer >= 2, got {k!r}")
    if not epsilon > 0:
        raise ParameterError("epsilon must be positive")
    if radii.k != k or len(radii.values) != g.n:
        raise ParameterError("radii were computed for a different graph or k")
    if len(girths) != g.m:
        raise ParameterError("girths were computed for a different graph")
    n = g.n
    values = radii.values
    scale = (1.0 + epsilon) ** p
    big = 2.0 * (k - 1) * scale
    cg = contract_by_girth(g, girths, scale / n**3, big if delete_long else INF)
    alive = set(range(n))
    edges: set[int] = set()
    trace = CoverTrace()
    step = (1.0 + 1.0 / (n * n)) * scale
    while alive:
        u = max(alive, key=lambda v: (values[v], -v))
        if values[u] < big:
            break
        sv = cg.component_of[u]
        searches: dict[int, tuple] = {}

        def ball_size_at(h: int) -> int:
            parts = _component_search(g, alive, cg, sv, h * step)
            searches[h] = parts
            return sum(1 for d in parts[4].values() if d < h * step)

        h = select_step_count(ball_size_at, n, k)
        if h > k - 1:
            raise InvariantViolation(f"ball growth exponent h={h} exceeded k-1={k - 1}")
        _, fp, _, bp, dhat, witness = searches[h]
        new_edges = _quotient_trees(g, cg, sv, fp, bp, dhat, witness, h * step)
        ball_size = sum(1 for d in dhat.values() if d < h * step)
        doomed = {c for c, d in dhat.items() if d <= (h - 1) * step}
        doomed.add(sv)
        removed: set[int] = set()
        for c in doomed:
            removed |= cg.members[c] & alive
        if len(new_edges) > 2 * max(0, ball_size - 1):
            raise InvariantViolation("quotient tree kept more than 2*(|ball|-1) edges")
        if not ball_size < n ** (1.0 / k) * len(doomed):
            raise InvariantViolation("grown quotient ball not sparse relative to removal")
        edges |= new_edges
        alive -= removed
        trace.iterations.append((u, step, h, ball_size, len(removed)))
    alive -= {v for v in alive if values[v] < scale / 8.0}
    _cover_loop(g, alive, radii, k, scale, trace, edges)
    trace.edges_added = len(edges)
    return edges, trace


_MIN_STRONG_N = 12


def spanner_strong(
    g: Graph, k: int, threads: int = 1, delete_long: bool = True
) -> SpannerResult:
    """Roundtrip spanner with stretch 2k-1 and O(k n^(1+1/k) log n) edges.

    k = 1 returns every edge. Instances with n < 12 or k > n fall back to
    :func:`spanner_basic`, whose guarantee has no size floor. Otherwise
    runs one contracted cover pass per geometric scale with
    eps = 1/(4(k-1)) and unions everything with the hub trees.
    """
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be an integer >= 1, got {k!r}")
    if k == 1:
        return SpannerResult(set(range(g.m)), 1, None, 0, g.m, [])
    if g.n < _MIN_STRONG_N or k > g.n:
        return spanner_basic(g, k, threads=threads)
    radii = compute_radii(g, k, threads=threads)
    edges, _hubs = build_hub_trees(g, radii, k)
    girths = edge_girths(g, threads=threads)
    eps = 1.0 / (4 * (k - 1))
    passes = scale_count(g.n, g.w_max, eps)
    traces: list[CoverTrace] = []
    for p in range(passes):
        got, tr = cover_scale_contracted(g, radii, girths, k, p, eps, delete_long)
        edges |= got
        traces.append(tr)
    return SpannerResult(edges, k, eps, passes, len(edges), traces)
