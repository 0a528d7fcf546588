import math
import random

import pytest

from rtspanner import (
    ContractedGraph,
    ParameterError,
    build_graph,
    component_in_out_trees,
    component_roundtrip_from,
    compute_radii,
    contract_by_girth,
    cover_scale,
    cover_scale_contracted,
    edge_girths,
    in_out_trees,
    roundtrip_from,
    spanner_basic,
    spanner_strong,
    verify_stretch,
)

from oracles import (
    bellman_ford,
    random_triples,
    roundtrip_matrix,
    strongly_connected_triples,
    undirected_components,
)

INF = math.inf


def test_girth_examples(triangle, two_cycle):
    assert edge_girths(triangle) == [3.0, 3.0, 3.0]
    assert edge_girths(two_cycle) == [5.0, 5.0]
    assert edge_girths(build_graph(2, [(0, 1, 1.0)])) == [INF]
    # a self-loop is its own shortest cycle
    assert edge_girths(build_graph(1, [(0, 0, 4.0)])) == [4.0]


def test_girths_match_bellman_ford_oracle():
    rng = random.Random(101)
    for _ in range(50):
        n = rng.randrange(2, 41)
        triples = random_triples(rng, n, rng.randrange(0, 3 * n))
        g = build_graph(n, triples)
        got = edge_girths(g)
        for eid, (t, h, w) in enumerate(triples):
            back = bellman_ford(n, triples, h, forward=True)
            assert got[eid] == w + back[t]


def test_contract_examples(triangle):
    girths = edge_girths(triangle)
    cg = contract_by_girth(triangle, girths, 0.001, 100.0)
    assert len(cg.members) == 3 and len(cg.super_edges) == 3
    cg2 = contract_by_girth(triangle, girths, 3.0, 100.0)
    assert len(cg2.members) == 1 and cg2.super_edges == []
    chord = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (0, 2, 5.0)])
    gir = edge_girths(chord)
    assert gir == [3.0, 3.0, 3.0, 6.0]
    cg3 = contract_by_girth(chord, gir, 3.0, 5.0)
    assert len(cg3.members) == 1 and cg3.super_edges == []


def test_contract_requires_ordered_thresholds(triangle):
    with pytest.raises(ParameterError):
        contract_by_girth(triangle, edge_girths(triangle), 5.0, 1.0)


def test_contract_drops_infinite_girth_edges():
    g = build_graph(3, [(0, 1, 1.0), (1, 0, 1.0), (1, 2, 1.0)])
    gir = edge_girths(g)
    assert gir[2] == INF
    cg = contract_by_girth(g, gir, 0.5, INF)
    assert all(eid != 2 for *_, eid in cg.super_edges)


def test_contract_components_match_bfs():
    rng = random.Random(202)
    for _ in range(25):
        n = rng.randrange(2, 30)
        triples = random_triples(rng, n, rng.randrange(0, 4 * n))
        g = build_graph(n, triples)
        girths = edge_girths(g)
        finite = sorted(x for x in girths if x < INF)
        cut = rng.choice(finite + [0.0]) if finite else 0.0
        cg = contract_by_girth(g, girths, cut, INF)
        pairs = [
            (g.tails[e], g.heads[e]) for e in range(g.m) if girths[e] <= cut
        ]
        labels = undirected_components(n, pairs)
        # same partition up to renaming
        seen = {}
        for v in range(n):
            assert seen.setdefault(labels[v], cg.component_of[v]) == cg.component_of[v]
        assert len(set(labels)) == len(cg.members)
        for sv, members in enumerate(cg.members):
            assert all(cg.component_of[v] == sv for v in members)


def test_component_roundtrip_examples():
    g = build_graph(3, [(0, 1, 2.0), (1, 0, 3.0), (1, 2, 1.0), (2, 0, 1.0)])
    cg = ContractedGraph([0, 0, 1], [{0, 1}, {2}], [])
    dhat = component_roundtrip_from(g, None, cg, 0, INF)
    assert dhat == {0: 0.0, 1: 2.0}  # out via 1->2, back via 2->0

    tri = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)])
    singles = ContractedGraph([0, 1, 2], [{0}, {1}, {2}], [])
    assert component_roundtrip_from(tri, None, singles, 0, INF) == roundtrip_from(tri, 0).dist

    iso = build_graph(3, [(0, 1, 1.0), (1, 0, 1.0)])
    dh = component_roundtrip_from(iso, None, ContractedGraph([0, 1, 2], [{0}, {1}, {2}], []), 0, INF)
    assert 2 not in dh  # unreachable supervertex stays infinite


def test_component_roundtrip_sandwich():
    # surrogate <= true member-pair minimum <= surrogate + n * contract threshold
    rng = random.Random(303)
    checked = 0
    while checked < 20:
        n = rng.randrange(4, 40)
        triples = strongly_connected_triples(rng, n, 3 * n, wmax=12.0)
        g = build_graph(n, triples)
        girths = edge_girths(g)
        finite = sorted(set(x for x in girths if x < INF))
        cut = rng.choice(finite)
        cg = contract_by_girth(g, girths, cut, INF)
        if len(cg.members) == n:
            continue  # want at least one real contraction
        checked += 1
        rt = roundtrip_matrix(n, triples)
        for sv in range(len(cg.members)):
            dhat = component_roundtrip_from(g, None, cg, sv, INF)
            for tv in range(len(cg.members)):
                exact = min(
                    (rt[a][b] for a in cg.members[sv] for b in cg.members[tv]),
                    default=INF,
                )
                approx = dhat.get(tv, INF)
                if exact == INF:
                    assert approx == INF
                else:
                    assert approx <= exact * (1 + 1e-9)
                    assert exact <= approx + n * cut + 1e-9


def test_component_trees_examples():
    g = build_graph(3, [(0, 1, 2.0), (1, 0, 3.0), (1, 2, 1.0), (2, 0, 1.0)])
    cg = ContractedGraph([0, 0, 1], [{0, 1}, {2}], [])
    assert component_in_out_trees(g, None, cg, 0, 3.0) == {2, 3}
    assert component_in_out_trees(g, None, cg, 0, 0.0) == set()

    tri = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)])
    singles = ContractedGraph([0, 1, 2], [{0}, {1}, {2}], [])
    for radius in (0.0, 2.0, 3.0, 3.5, 10.0):
        assert component_in_out_trees(tri, None, singles, 0, radius) == in_out_trees(
            tri, 0, radius
        )


def test_component_trees_connect_ball_components():
    # collapsing components to points, kept edges must reach every ball
    # component from the sources within twice the radius
    rng = random.Random(404)
    for _ in range(15):
        n = rng.randrange(6, 30)
        triples = strongly_connected_triples(rng, n, 2 * n, wmax=8.0)
        g = build_graph(n, triples)
        girths = edge_girths(g)
        finite = sorted(set(x for x in girths if x < INF))
        cut = finite[len(finite) // 3]
        cg = contract_by_girth(g, girths, cut, INF)
        sv = cg.component_of[rng.randrange(n)]
        radius = float(rng.randrange(4, 40))
        dhat = component_roundtrip_from(g, None, cg, sv, radius)
        kept = component_in_out_trees(g, None, cg, sv, radius)
        ball_comps = {c for c, d in dhat.items() if d < radius}
        assert len(kept) <= 2 * max(0, len(ball_comps) - 1)
        # quotient reachability over kept edges, components free to traverse
        quotient = [g.edge(e) for e in kept]
        comp = cg.component_of
        zeroed = []
        for t, h, w in quotient:
            zeroed.append((comp[t], comp[h], w))
        K = len(cg.members)
        fwd = bellman_ford(K, [(a, b, w) for a, b, w in zeroed], sv, True)
        bwd = bellman_ford(K, [(a, b, w) for a, b, w in zeroed], sv, False)
        for c in ball_comps:
            assert fwd[c] < INF and bwd[c] < INF
            assert fwd[c] + bwd[c] <= 2 * radius * (1 + 1e-9)


def test_cover_contracted_reduces_to_plain_cover(triangle):
    # R(u)=3 for all: with L ~ 3.81 phase 1 is skipped (3 < 2L) and the
    # boundary keeps everything (3 >= L/8), so the pass mirrors cover_scale
    rad = compute_radii(triangle, 2)
    girths = edge_girths(triangle)
    e_strong, tr_strong = cover_scale_contracted(triangle, rad, girths, 2, 6, 0.25)
    scale = 1.25**6
    e_plain, tr_plain = cover_scale(triangle, rad, 2, scale)
    assert e_strong == e_plain == set()
    assert [r[2] for r in tr_strong.iterations] == [r[2] for r in tr_plain.iterations]


def test_cover_contracted_drops_small_radii(triangle):
    # L large enough that every radius sits below L/8: nothing survives
    rad = compute_radii(triangle, 2)
    girths = edge_girths(triangle)
    edges, trace = cover_scale_contracted(triangle, rad, girths, 2, 22, 0.25)
    assert edges == set() and trace.iterations == []


def test_spanner_strong_small_instances_fall_back(triangle):
    assert spanner_strong(triangle, 2).edges == spanner_basic(triangle, 2).edges
    assert spanner_strong(triangle, 1).edges == {0, 1, 2}
    with pytest.raises(ParameterError):
        spanner_strong(triangle, 0)


def test_spanner_strong_stretch_random():
    rng = random.Random(505)
    for _ in range(6):
        n = rng.randrange(12, 34)
        triples = strongly_connected_triples(rng, n, 3 * n, wmax=40.0)
        g = build_graph(n, triples)
        k = rng.choice([2, 3, 4])
        res = spanner_strong(g, k)
        report = verify_stretch(g, res.edges, 2 * k - 1)
        assert report.ok, (n, k, report.violations[:3])
        for tr in res.traces:
            assert all(rec[2] <= k - 1 for rec in tr.iterations)


def test_spanner_strong_deterministic():
    rng = random.Random(66)
    triples = strongly_connected_triples(rng, 18, 40)
    a = spanner_strong(build_graph(18, triples), 2).edges
    b = spanner_strong(build_graph(18, triples), 2).edges
    assert a == b


def test_edge_window_participation():
    # every edge may appear as a quotient edge for a bounded range of
    # scales: the girth window spans a factor 2(k-1)n^3
    rng = random.Random(70)
    n = 16
    triples = strongly_connected_triples(rng, n, 40, wmax=30.0)
    g = build_graph(n, triples)
    k = 2
    girths = edge_girths(g)
    eps = 1.0 / (4 * (k - 1))
    from rtspanner.cover_basic import scale_count
    from rtspanner.cover_strong import contract_by_girth as contract

    passes = scale_count(n, g.w_max, eps)
    seen = [0] * g.m
    for p in range(passes):
        scale = (1 + eps) ** p
        cg = contract(g, girths, scale / n**3, 2 * (k - 1) * scale)
        for *_, eid in cg.super_edges:
            seen[eid] += 1
    cap = math.ceil(math.log(2 * (k - 1) * n**3) / math.log(1 + eps))
    assert all(c <= cap for c in seen)


def test_delete_long_flag_changes_only_quotient_edges():
    rng = random.Random(99)
    triples = strongly_connected_triples(rng, 15, 35, wmax=25.0)
    g = build_graph(15, triples)
    rad = compute_radii(g, 2)
    girths = edge_girths(g)
    for p in (0, 4, 9):
        with_del, _ = cover_scale_contracted(g, rad, girths, 2, p, 0.25, delete_long=True)
        without, _ = cover_scale_contracted(g, rad, girths, 2, p, 0.25, delete_long=False)
        assert with_del == without
