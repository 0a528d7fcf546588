import math
import random

import numpy as np
import pytest

from rtspanner import (
    MalformedInputError,
    ParameterError,
    all_pairs_roundtrip,
    build_graph,
    verify_size,
    verify_stretch,
)

from oracles import random_triples, roundtrip_matrix

INF = math.inf


def test_apsp_examples(triangle, two_cycle):
    m = all_pairs_roundtrip(triangle)
    assert np.array_equal(m, np.array([[0, 3, 3], [3, 0, 3], [3, 3, 0]], dtype=float))
    assert all_pairs_roundtrip(two_cycle)[0, 1] == 5.0
    dag = build_graph(3, [(0, 1, 1.0), (1, 2, 1.0)])
    md = all_pairs_roundtrip(dag)
    off = md[~np.eye(3, dtype=bool)]
    assert np.all(np.isinf(off))


def test_apsp_matches_floyd_warshall():
    rng = random.Random(88)
    for _ in range(20):
        n = rng.randrange(1, 18)
        triples = random_triples(rng, n, rng.randrange(0, 4 * n + 1))
        g = build_graph(n, triples)
        got = all_pairs_roundtrip(g)
        ref = roundtrip_matrix(n, triples)
        for i in range(n):
            for j in range(n):
                assert got[i, j] == ref[i][j]


def test_apsp_symmetry_and_triangle_inequality():
    rng = random.Random(12)
    g = build_graph(10, random_triples(rng, 10, 35))
    m = all_pairs_roundtrip(g)
    assert np.array_equal(m, m.T)
    assert np.all(np.diag(m) == 0)
    for _ in range(60):
        u, v, w = rng.randrange(10), rng.randrange(10), rng.randrange(10)
        if np.isfinite(m[u, w]) and np.isfinite(m[w, v]):
            assert m[u, v] <= (m[u, w] + m[w, v]) * (1 + 1e-9)


def test_identity_spanner_has_stretch_one():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randrange(2, 15)
        g = build_graph(n, random_triples(rng, n, 3 * n))
        report = verify_stretch(g, set(range(g.m)), 1.0)
        assert report.ok
        if report.finite_pairs:
            assert report.max_stretch == 1.0


def test_broken_cycle_reports_infinite_stretch(triangle):
    report = verify_stretch(triangle, {0, 1}, 1000.0)
    assert not report.ok
    assert math.isinf(report.max_stretch)
    assert report.finite_pairs == 3
    assert all(math.isinf(dh) for *_, dh in report.violations)


def test_monotone_under_edge_addition():
    rng = random.Random(44)
    g = build_graph(8, random_triples(rng, 8, 30))
    ids = list(range(g.m))
    prev = INF
    for cut in (10, 20, 30):
        rep = verify_stretch(g, set(ids[:cut]), 1.0)
        cur = rep.max_stretch if rep.finite_pairs else 0.0
        assert cur <= prev or math.isinf(prev)
        prev = cur
    assert verify_stretch(g, set(ids), 1.0).max_stretch <= 1.0 + 1e-9


def test_spanner_containment_checked(triangle):
    with pytest.raises(MalformedInputError):
        verify_stretch(triangle, {0, 7}, 3.0)


def test_no_finite_pairs():
    g = build_graph(3, [(0, 1, 2.0)])
    report = verify_stretch(g, set(), 3.0)
    assert report.ok and report.finite_pairs == 0 and report.max_stretch == 0.0
    assert report.argmax_pair is None


def test_verify_size_examples():
    bound, ratio = verify_size(100, 1.0, 2, 6644, "strong")
    assert bound == pytest.approx(2 * 100**1.5 * math.log2(100))
    assert ratio == pytest.approx(6644 / bound)
    bound2, ratio2 = verify_size(2, 1.0, 2, 2, "basic")
    assert bound2 == pytest.approx(2 * 2**1.5)
    assert ratio2 == pytest.approx(2 / bound2)
    assert verify_size(10, 1.0, 2, 0, "strong")[1] == 0.0


def test_verify_size_validation():
    with pytest.raises(ParameterError):
        verify_size(1, 1.0, 2, 0, "basic")
    with pytest.raises(ParameterError):
        verify_size(5, 1.0, 2, 0, "huge")
