"""Stochastic primitives for the growth process.

Everything here draws from a caller-owned random.Random stream, so a run
is reproducible from its seed alone (within this implementation; no
cross-library bit compatibility is promised).
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from random import Random

import numpy as np

from .graph import Graph

# Shortest supported shortcut distance: adjacent pairs are never shortcut
# targets, so the distance table starts at 2.
D_MIN = 2

# Average degree within DEG_EPS of 2 makes the log base degenerate
# (base -> 1), so the estimator falls back to the worst-case path length.
DEG_EPS = 0.05


def sample_step_length(p1: float, rng: Random) -> int:
    """Walk phase length: 1 with probability p1, else 2."""
    if not 0.0 <= p1 <= 1.0:
        raise ValueError(f"p1 must be in [0, 1], got {p1}")
    return 1 if rng.random() < p1 else 2


def estimate_diameter(node_count: int, edge_count: int) -> float:
    """Branching-process diameter estimate from node and edge counts.

    Treats every node as having the average degree; the number of nodes
    within k hops then grows like a geometric series, and the estimate is
    twice the k at which that series covers the whole graph:

        2 * log_{deg-1}(node_count * (deg - 2) + 1)

    Graphs with average degree <= 2 + DEG_EPS have no usable branching
    factor; the worst-case path-graph diameter (node_count - 1) is
    returned instead.  Callers floor and clamp the result as needed.
    """
    if node_count < 1:
        raise ValueError(f"node_count must be >= 1, got {node_count}")
    if edge_count < 0:
        raise ValueError(f"edge_count must be >= 0, got {edge_count}")
    deg = 2.0 * edge_count / node_count
    if deg <= 2.0 + DEG_EPS:
        return float(node_count - 1)
    return 2.0 * math.log(node_count * (deg - 2.0) + 1.0) / math.log(deg - 1.0)


@dataclass(frozen=True, eq=False)
class DistanceDistribution:
    """Normalized table of shortcut-distance probabilities on [2, d_max_est].

    probabilities[i] is the mass of distance d = i + 2 and equals
    normalizer / d**beta; cumulative is its running sum with the last
    entry pinned to 1.0 so sampling never falls off the table.
    """

    d_max_est: int
    beta: float
    normalizer: float
    probabilities: np.ndarray
    cumulative: np.ndarray

    @classmethod
    def from_support(cls, d_max_est: int, beta: float = 2.0) -> "DistanceDistribution":
        if d_max_est < D_MIN:
            raise ValueError(f"d_max_est must be >= {D_MIN}, got {d_max_est}")
        support = np.arange(D_MIN, d_max_est + 1, dtype=np.float64)
        weights = support ** -beta
        normalizer = 1.0 / weights.sum()
        probabilities = normalizer * weights
        cumulative = np.cumsum(probabilities)
        cumulative[-1] = 1.0
        return cls(d_max_est=d_max_est, beta=beta, normalizer=normalizer,
                   probabilities=probabilities, cumulative=cumulative)

    def probability_of(self, d: int) -> float:
        if not D_MIN <= d <= self.d_max_est:
            return 0.0
        return float(self.probabilities[d - D_MIN])


def build_distance_distribution(g: Graph, beta: float = 2.0) -> DistanceDistribution:
    """Distance table for the current graph state.

    The support ends at the floored diameter estimate, clamped to
    [2, node_count - 1] (no shortest path can be longer, and the table
    needs at least the single distance 2).
    """
    if g.node_count < 3:
        raise ValueError(f"need at least 3 nodes for a distance >= 2, got {g.node_count}")
    est = estimate_diameter(g.node_count, g.edge_count)
    d_max_est = min(max(math.floor(est), D_MIN), g.node_count - 1)
    return DistanceDistribution.from_support(d_max_est, beta=beta)


def sample_distance(dist: DistanceDistribution, rng: Random) -> int:
    """Draw a distance from the table via its cumulative sums."""
    return D_MIN + bisect_left(dist.cumulative, rng.random())
