"""Brute-force reference implementations used to cross-check the fast paths.

Everything here is deliberately naive (full matrices, triple enumeration)
and only meant for graphs small enough to enumerate.
"""
from __future__ import annotations

import math
from itertools import combinations
from random import Random

from rwnet import Graph

INF = math.inf


def adjacency_sets(g: Graph) -> list[set[int]]:
    return [set(g.neighbors(v).tolist()) for v in range(g.node_count)]


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.node_count
    dist = [[0.0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        dist[u][v] = 1.0
        dist[v][u] = 1.0
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def brute_local_clustering(g: Graph, v: int) -> float:
    adj = adjacency_sets(g)
    nbrs = sorted(adj[v])
    k = len(nbrs)
    if k < 2:
        return 0.0
    links = sum(1 for a, b in combinations(nbrs, 2) if b in adj[a])
    return links / (k * (k - 1) / 2)


def brute_average_local_clustering(g: Graph) -> float:
    return sum(brute_local_clustering(g, v) for v in range(g.node_count)) / g.node_count


def brute_transitivity(g: Graph) -> float:
    """Closed vs open triplets by enumerating all 3-node subsets."""
    adj = adjacency_sets(g)
    closed = 0
    open_ = 0
    for a, b, c in combinations(range(g.node_count), 3):
        edges = (b in adj[a]) + (c in adj[a]) + (c in adj[b])
        if edges == 3:
            closed += 3
        elif edges == 2:
            open_ += 1
    total = closed + open_
    return closed / total if total else 0.0


def brute_average_shortest_path(g: Graph) -> float:
    dist = floyd_warshall(g)
    n = g.node_count
    total = 0.0
    pairs = 0
    for i in range(n):
        for j in range(i + 1, n):
            if dist[i][j] == INF:
                raise ValueError("disconnected oracle input")
            total += dist[i][j]
            pairs += 1
    return total / pairs


def random_connected_graph(rng: Random, max_nodes: int = 8) -> Graph:
    """Random connected graph: a random spanning tree plus random extras."""
    n = rng.randint(2, max_nodes)
    g = Graph()
    for _ in range(n):
        g.add_node()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        g.add_edge(order[i], order[rng.randrange(i)])
    extra_prob = rng.random()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_prob * 0.5:
                g.add_edge(u, v)
    return g
