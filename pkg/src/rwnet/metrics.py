"""Network measures: clustering, path lengths, degree-distribution fit.

All operations are read-only on the graph.  Path lengths come from
per-source BFS; exact mode visits every source and is quadratic in graph
size, so measure() switches to a 1000-source sample above
ASPL_EXACT_MAX_NODES unless told otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

import numpy as np

from .graph import Graph

ASPL_EXACT_MAX_NODES = 20_000
ASPL_SAMPLED_SOURCES = 1_000


def local_clustering(g: Graph, v: int) -> float:
    """Fraction of v's neighbor pairs that are themselves adjacent.

    Nodes with fewer than two neighbors have no pairs and score 0.
    """
    nbrs = g.neighbors(v)
    k = nbrs.size
    if k < 2:
        return 0.0
    members = set(nbrs.tolist())
    links = sum(len(members.intersection(g.neighbors(u).tolist())) for u in nbrs) // 2
    return 2.0 * links / (k * (k - 1))


def _clustering_pass(g: Graph) -> tuple[float, float]:
    """One sweep computing (mean local coefficient, transitivity)."""
    n = g.node_count
    sets = [set(g.neighbors(v).tolist()) for v in range(n)]
    local_sum = 0.0
    closed = 0           # sum over v of edges among N(v); equals 3 * triangles
    triplets = 0
    for v in range(n):
        members = sets[v]
        k = len(members)
        if k < 2:
            continue
        links = sum(len(sets[u] & members) for u in members) // 2
        local_sum += 2.0 * links / (k * (k - 1))
        closed += links
        triplets += k * (k - 1) // 2
    avg_local = local_sum / n
    trans = closed / triplets if triplets else 0.0
    return avg_local, trans


def average_local_clustering(g: Graph) -> float:
    """Mean of local_clustering over all nodes (degree <= 1 counts as 0)."""
    if g.node_count == 0:
        raise ValueError("average clustering of an empty graph is undefined")
    return _clustering_pass(g)[0]


def transitivity(g: Graph) -> float:
    """3 * triangles / connected triples; 0 when there are no triples."""
    if g.node_count == 0:
        raise ValueError("transitivity of an empty graph is undefined")
    return _clustering_pass(g)[1]


def _require_connected(g: Graph) -> None:
    sizes = g.connected_component_sizes()
    if len(sizes) > 1:
        n = g.node_count
        reachable = sum(s * (s - 1) // 2 for s in sizes)
        missing = n * (n - 1) // 2 - reachable
        raise ValueError(
            f"graph is disconnected ({len(sizes)} components, "
            f"{missing} unreachable node pairs)")


def average_shortest_path(g: Graph, sample_sources: int | None = None,
                          seed: int = 0) -> float:
    """Mean hop distance over all unordered node pairs.

    With sample_sources, BFS runs only from that many uniformly sampled
    distinct nodes and the mean is taken over (source, other) distances,
    an unbiased estimator of the pair mean that matches the exact value
    when every node is sampled.  Raises on disconnected input.
    """
    n = g.node_count
    if n < 2:
        raise ValueError(f"average shortest path needs >= 2 nodes, got {n}")
    _require_connected(g)
    if sample_sources is None:
        sources = range(n)
        count = n
    else:
        if sample_sources < 1:
            raise ValueError(f"sample_sources must be >= 1, got {sample_sources}")
        count = min(sample_sources, n)
        sources = Random(seed).sample(range(n), count)
    total = 0
    for s in sources:
        dist_sum, _ = g.distance_sum(s)
        total += dist_sum
    return total / (count * (n - 1))


@dataclass(frozen=True)
class DegreeHistogram:
    """(degree, probability) pairs for every nonzero-count degree >= 1.

    Probabilities are counts over the full node count, so isolated nodes
    still weigh the normalization even though k = 0 is never listed.
    """

    entries: tuple[tuple[int, float], ...]


def degree_histogram(g: Graph) -> DegreeHistogram:
    if g.node_count == 0:
        raise ValueError("degree histogram of an empty graph is undefined")
    counts = np.bincount(g.degrees())
    n = g.node_count
    entries = tuple((int(k), counts[k] / n)
                    for k in np.nonzero(counts)[0] if k >= 1)
    return DegreeHistogram(entries=entries)


def fit_power_law(hist: DegreeHistogram) -> float:
    """Least-squares slope of ln P(k) against ln k.

    This is the plain unweighted fit on the raw probability mass
    function; for P(k) = c * k**-b it returns exactly -b.
    """
    if len(hist.entries) < 2:
        raise ValueError(f"power-law fit needs >= 2 degrees, got {len(hist.entries)}")
    ks = np.array([k for k, _ in hist.entries], dtype=np.float64)
    ps = np.array([p for _, p in hist.entries], dtype=np.float64)
    if (ks < 1).any():
        raise ValueError("power-law fit requires degrees >= 1")
    if (ps <= 0).any():
        raise ValueError("power-law fit requires positive probabilities")
    slope, _ = np.polyfit(np.log(ks), np.log(ps), 1)
    return float(slope)


@dataclass(frozen=True)
class NetworkMetrics:
    """One row of measurements for a single graph."""

    avg_local_clustering: float
    transitivity: float
    avg_shortest_path: float
    gamma: float
    max_degree: int
    aspl_mode: str


def resolve_aspl_mode(mode: str, node_count: int) -> tuple[int | None, str]:
    """Map an --aspl style mode string to (sample size or None, label).

    "auto" means exact up to ASPL_EXACT_MAX_NODES nodes and a
    1000-source sample beyond that.
    """
    if mode == "auto":
        if node_count <= ASPL_EXACT_MAX_NODES:
            return None, "exact"
        return ASPL_SAMPLED_SOURCES, f"sampled:{ASPL_SAMPLED_SOURCES}"
    if mode == "exact":
        return None, "exact"
    if mode.startswith("sampled:"):
        try:
            k = int(mode.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad aspl mode {mode!r}") from None
        if k < 1:
            raise ValueError(f"sampled source count must be >= 1, got {k}")
        return k, f"sampled:{k}"
    raise ValueError(f"bad aspl mode {mode!r} (expected auto, exact, or sampled:K)")


def measure(g: Graph, aspl_mode: str = "auto", aspl_seed: int = 0) -> NetworkMetrics:
    """All reported measures for one connected graph of >= 3 nodes.

    gamma is NaN when the graph is regular enough that the degree
    histogram has a single support point (a slope needs two).
    """
    if g.node_count < 3:
        raise ValueError(f"measure needs >= 3 nodes, got {g.node_count}")
    sources, label = resolve_aspl_mode(aspl_mode, g.node_count)
    aspl = average_shortest_path(g, sample_sources=sources, seed=aspl_seed)
    avg_local, trans = _clustering_pass(g)
    hist = degree_histogram(g)
    gamma = fit_power_law(hist) if len(hist.entries) >= 2 else math.nan
    return NetworkMetrics(
        avg_local_clustering=avg_local,
        transitivity=trans,
        avg_shortest_path=aspl,
        gamma=gamma,
        max_degree=int(g.degrees().max()),
        aspl_mode=label,
    )
