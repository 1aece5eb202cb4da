import math
from random import Random

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from rwnet import (
    DegreeHistogram,
    GenParams,
    Graph,
    average_local_clustering,
    average_shortest_path,
    degree_histogram,
    fit_power_law,
    generate,
    local_clustering,
    measure,
    transitivity,
)
from rwnet.metrics import resolve_aspl_mode
from oracles import (
    brute_average_local_clustering,
    brute_average_shortest_path,
    brute_local_clustering,
    brute_transitivity,
    random_connected_graph,
)


def square_with_diagonal():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def petersen():
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
        edges.append((i, i + 5))              # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return Graph.from_edges(10, edges)


# ------------------------------------------------------------- clustering

def test_local_clustering_examples():
    assert local_clustering(Graph.complete(3), 0) == 1.0
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert local_clustering(path, 1) == 0.0
    assert local_clustering(path, 0) == 0.0  # degree 1: convention
    sq = square_with_diagonal()
    assert local_clustering(sq, 0) == pytest.approx(2 / 3)
    assert local_clustering(sq, 1) == 1.0


def test_local_clustering_invalid_node():
    with pytest.raises(ValueError):
        local_clustering(Graph.complete(3), 12)


def test_average_local_clustering_examples():
    assert average_local_clustering(Graph.complete(3)) == 1.0
    assert average_local_clustering(square_with_diagonal()) == pytest.approx(5 / 6)
    assert average_local_clustering(Graph.cycle(10)) == 0.0
    with pytest.raises(ValueError):
        average_local_clustering(Graph())


def test_transitivity_examples():
    assert transitivity(Graph.complete(3)) == 1.0
    assert transitivity(square_with_diagonal()) == pytest.approx(0.75)
    star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert transitivity(star) == 0.0


def test_transitivity_no_triplets_is_zero():
    assert transitivity(Graph.from_edges(2, [(0, 1)])) == 0.0


# ------------------------------------------------------------ path length

def test_aspl_examples():
    assert average_shortest_path(Graph.from_edges(2, [(0, 1)])) == 1.0
    assert average_shortest_path(Graph.cycle(10)) == pytest.approx(25 / 9)
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert average_shortest_path(path) == pytest.approx(4 / 3)


def test_aspl_rejects_disconnected_with_pair_count():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError, match="4 unreachable"):
        average_shortest_path(g)


def test_sampled_aspl_with_all_sources_is_exact():
    g = generate(GenParams(N=120, m=2, p1=0.5, seed=8))
    exact = average_shortest_path(g)
    sampled = average_shortest_path(g, sample_sources=g.node_count, seed=5)
    assert sampled == pytest.approx(exact, abs=1e-12)


def test_sampled_aspl_deterministic_and_close():
    g = generate(GenParams(N=2000, m=3, p1=0.5, seed=15))
    a = average_shortest_path(g, sample_sources=200, seed=3)
    b = average_shortest_path(g, sample_sources=200, seed=3)
    assert a == b
    exact = average_shortest_path(g)
    assert a == pytest.approx(exact, rel=0.05)


def test_resolve_aspl_mode():
    assert resolve_aspl_mode("auto", 100) == (None, "exact")
    assert resolve_aspl_mode("auto", 20_000) == (None, "exact")
    assert resolve_aspl_mode("auto", 20_001) == (1000, "sampled:1000")
    assert resolve_aspl_mode("exact", 10**6) == (None, "exact")
    assert resolve_aspl_mode("sampled:50", 100) == (50, "sampled:50")
    for bad in ("sampled:x", "sampled:0", "nope"):
        with pytest.raises(ValueError):
            resolve_aspl_mode(bad, 100)


# ---------------------------------------------------------------- fitting

def test_fit_power_law_exact_synthetic():
    hist = DegreeHistogram(entries=((1, 64 / 84), (2, 16 / 84), (4, 4 / 84)))
    assert fit_power_law(hist) == pytest.approx(-2.0, abs=1e-9)


def test_fit_power_law_flat():
    hist = DegreeHistogram(entries=((1, 0.5), (2, 0.5)))
    assert fit_power_law(hist) == pytest.approx(0.0, abs=1e-12)


@settings(max_examples=40)
@given(st.floats(0.5, 4.0), st.integers(3, 12))
def test_fit_power_law_recovers_exact_exponent(beta, points):
    ks = [2 ** i for i in range(points)]
    total = sum(k ** -beta for k in ks)
    hist = DegreeHistogram(entries=tuple((k, k ** -beta / total) for k in ks))
    assert fit_power_law(hist) == pytest.approx(-beta, abs=1e-9)


def test_fit_power_law_scale_invariance():
    base = ((1, 0.6), (2, 0.25), (3, 0.1), (7, 0.05))
    hist1 = DegreeHistogram(entries=base)
    hist2 = DegreeHistogram(entries=tuple((k, 13.7 * p) for k, p in base))
    assert fit_power_law(hist1) == pytest.approx(fit_power_law(hist2), abs=1e-12)


def test_fit_power_law_input_errors():
    with pytest.raises(ValueError):
        fit_power_law(DegreeHistogram(entries=((2, 1.0),)))
    with pytest.raises(ValueError):
        fit_power_law(DegreeHistogram(entries=((0, 0.5), (2, 0.5))))


def test_degree_histogram_counts_whole_graph():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3)])  # one isolated node
    hist = degree_histogram(g)
    assert dict(hist.entries) == {1: 0.6, 3: 0.2}  # k=0 excluded, mass kept


# ---------------------------------------------------------------- measure

def test_measure_square_with_diagonal():
    m = measure(square_with_diagonal())
    assert m.avg_local_clustering == pytest.approx(5 / 6, abs=1e-4)
    assert m.transitivity == pytest.approx(0.75)
    assert m.avg_shortest_path == pytest.approx(7 / 6, abs=1e-4)
    assert m.max_degree == 3
    assert m.aspl_mode == "exact"


def test_measure_cycle10():
    m = measure(Graph.cycle(10))
    assert m.avg_local_clustering == 0.0
    assert m.transitivity == 0.0
    assert m.avg_shortest_path == pytest.approx(25 / 9, abs=1e-4)
    assert m.max_degree == 2
    assert math.isnan(m.gamma)  # single-degree graph has no slope


def test_measure_k3():
    m = measure(Graph.complete(3))
    assert m.avg_local_clustering == 1.0
    assert m.transitivity == 1.0
    assert m.avg_shortest_path == 1.0
    assert m.max_degree == 2
    assert math.isnan(m.gamma)


def test_measure_requires_three_nodes():
    with pytest.raises(ValueError):
        measure(Graph.from_edges(2, [(0, 1)]))


# ----------------------------------------------------------------- oracles

@settings(max_examples=60)
@given(st.integers(0, 10_000))
def test_metrics_match_bruteforce(seed):
    g = random_connected_graph(Random(seed), max_nodes=8)
    for v in range(g.node_count):
        assert local_clustering(g, v) == pytest.approx(
            brute_local_clustering(g, v), abs=1e-9)
    assert average_local_clustering(g) == pytest.approx(
        brute_average_local_clustering(g), abs=1e-9)
    assert transitivity(g) == pytest.approx(brute_transitivity(g), abs=1e-9)
    if g.node_count >= 2:
        assert average_shortest_path(g) == pytest.approx(
            brute_average_shortest_path(g), abs=1e-9)


def test_vertex_transitive_graphs_have_equal_coefficients():
    for g in (Graph.complete(4), Graph.complete(5), petersen()):
        assert average_local_clustering(g) == pytest.approx(transitivity(g), abs=1e-12)


def test_sampled_aspl_stability_at_scale():
    # 1000-source sampling is tight: its spread across independent source
    # sets stays under 1% of the exact value
    g5 = generate(GenParams(N=5000, m=5, p1=0.5, seed=60))
    exact5 = average_shortest_path(g5)
    sampled5 = average_shortest_path(g5, sample_sources=1000, seed=1)
    assert sampled5 == pytest.approx(exact5, rel=0.01)

    g10 = generate(GenParams(N=10_000, m=5, p1=0.5, seed=61))
    exact10 = average_shortest_path(g10)
    samples = [average_shortest_path(g10, sample_sources=1000, seed=s)
               for s in range(20)]
    spread = float(np.std(samples))
    assert spread < 0.01 * exact10
    assert np.mean(samples) == pytest.approx(exact10, rel=0.01)
