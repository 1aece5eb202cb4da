"""Undirected simple graph on dense integer node ids.

Adjacency lives in one flat int32 pool with per-node (start, degree,
capacity) bookkeeping, so neighbor blocks are numpy slices.  That gives
O(1) amortized edge insertion, O(1) uniform neighbor picks for random
walks, and lets BFS expand whole frontiers with vectorized gathers, which
is what keeps generation and path-length measurement fast on graphs with
hundreds of thousands of edges.
"""
from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

import numpy as np


class Graph:
    """Growable undirected simple graph (no self-loops, no parallel edges)."""

    def __init__(self) -> None:
        self._start = np.zeros(16, dtype=np.int64)
        self._deg = np.zeros(16, dtype=np.int32)
        self._cap = np.zeros(16, dtype=np.int32)
        self._pool = np.empty(64, dtype=np.int32)
        self._pool_used = 0
        self._node_count = 0
        self._edge_count = 0

    # -- construction helpers -------------------------------------------

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        """Cycle graph C_n."""
        if n < 3:
            raise ValueError(f"cycle needs at least 3 nodes, got {n}")
        g = cls()
        for _ in range(n):
            g.add_node()
        for i in range(n):
            g.add_edge(i, (i + 1) % n)
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        """Complete graph K_n."""
        if n < 1:
            raise ValueError(f"complete graph needs at least 1 node, got {n}")
        g = cls()
        for _ in range(n):
            g.add_node()
        for u in range(n):
            for v in range(u + 1, n):
                g.add_edge(u, v)
        return g

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        g = cls()
        for _ in range(n):
            g.add_node()
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # -- core mutation ---------------------------------------------------

    def add_node(self) -> int:
        """Append a node and return its id (ids are dense: 0..n-1)."""
        v = self._node_count
        if v == self._start.size:
            self._start = self._grown(self._start)
            self._deg = self._grown(self._deg)
            self._cap = self._grown(self._cap)
        self._start[v] = 0
        self._deg[v] = 0
        self._cap[v] = 0
        self._node_count += 1
        return v

    def add_edge(self, u: int, v: int) -> bool:
        """Insert undirected edge (u, v).

        Returns False without touching the graph when u == v or the edge
        already exists; raises ValueError for ids outside the graph.
        """
        self._check_node(u)
        self._check_node(v)
        if u == v or self.has_edge(u, v):
            return False
        self._append_half(u, v)
        self._append_half(v, u)
        self._edge_count += 1
        return True

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        if self._deg[u] > self._deg[v]:
            u, v = v, u
        s = self._start[u]
        return bool((self._pool[s:s + self._deg[u]] == v).any())

    # -- queries ----------------------------------------------------------

    @property
    def node_count(self) -> int:
        return self._node_count

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        self._check_node(v)
        return int(self._deg[v])

    def degrees(self) -> np.ndarray:
        """Degree of every node, as an int32 array indexed by node id."""
        return self._deg[:self._node_count].copy()

    def neighbors(self, v: int) -> np.ndarray:
        """Neighbors of v in insertion order.

        Read-only numpy view into the adjacency pool; it is only
        guaranteed current until the next mutation of the graph.
        """
        self._check_node(v)
        s = self._start[v]
        view = self._pool[s:s + self._deg[v]]
        view.flags.writeable = False
        return view

    def neighbor_at(self, v: int, k: int) -> int:
        """k-th neighbor of v; pair with degree() for uniform picks."""
        return int(self._pool[self._start[v] + k])

    def average_degree(self) -> float:
        """2|E|/|V|; raises on the empty graph."""
        if self._node_count == 0:
            raise ValueError("average degree of an empty graph is undefined")
        return 2.0 * self._edge_count / self._node_count

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges exactly once, ordered by (u, adjacency position)."""
        for u in range(self._node_count):
            s = self._start[u]
            for v in self._pool[s:s + self._deg[u]]:
                if u < v:
                    yield u, int(v)

    # -- traversal ---------------------------------------------------------

    def bfs_distances(self, source: int, depth_limit: int | None = None) -> dict[int, int]:
        """Hop distance from source to every reachable node.

        With depth_limit only nodes within that many hops are returned.
        """
        self._check_node(source)
        visited = np.zeros(self._node_count, dtype=bool)
        scratch = np.empty(self._node_count, dtype=np.int64)
        visited[source] = True
        out = {source: 0}
        frontier = np.array([source], dtype=np.int64)
        level = 0
        while frontier.size and (depth_limit is None or level < depth_limit):
            frontier = self._expand(frontier, visited, scratch)
            level += 1
            for v in frontier.tolist():
                out[v] = level
        return out

    def ring_at_distance(self, source: int, dist: int) -> tuple[int, np.ndarray]:
        """Nodes at graph distance exactly dist from source.

        Returns (realized, ring).  realized == dist on an exact hit;
        when the BFS runs out of new nodes earlier, realized is the
        largest distance that has any nodes and ring holds that level
        (realized 0 means source has no other reachable node).
        """
        self._check_node(source)
        if dist < 1:
            raise ValueError(f"distance must be >= 1, got {dist}")
        visited = np.zeros(self._node_count, dtype=bool)
        scratch = np.empty(self._node_count, dtype=np.int64)
        visited[source] = True
        frontier = np.array([source], dtype=np.int64)
        level = 0
        while level < dist:
            nxt = self._expand(frontier, visited, scratch)
            if nxt.size == 0:
                return level, frontier if level else np.empty(0, dtype=np.int64)
            frontier = nxt
            level += 1
        return level, frontier

    def distance_sum(self, source: int) -> tuple[int, int]:
        """(sum of distances from source, count of reached nodes incl. source)."""
        self._check_node(source)
        visited = np.zeros(self._node_count, dtype=bool)
        scratch = np.empty(self._node_count, dtype=np.int64)
        visited[source] = True
        frontier = np.array([source], dtype=np.int64)
        level = 0
        total = 0
        reached = 1
        while frontier.size:
            frontier = self._expand(frontier, visited, scratch)
            level += 1
            total += level * frontier.size
            reached += frontier.size
        return total, reached

    def connected_component_sizes(self) -> list[int]:
        """Sizes of all connected components."""
        n = self._node_count
        seen = np.zeros(n, dtype=bool)
        scratch = np.empty(n, dtype=np.int64)
        sizes = []
        for root in range(n):
            if seen[root]:
                continue
            seen[root] = True
            size = 1
            frontier = np.array([root], dtype=np.int64)
            while frontier.size:
                frontier = self._expand(frontier, seen, scratch)
                size += frontier.size
            sizes.append(size)
        return sizes

    def is_connected(self) -> bool:
        if self._node_count == 0:
            return True
        _, reached = self.distance_sum(0)
        return reached == self._node_count

    # -- internals ----------------------------------------------------------

    def _expand(self, frontier: np.ndarray, visited: np.ndarray,
                scratch: np.ndarray) -> np.ndarray:
        """One BFS level: unvisited neighbors of frontier, marked and deduped."""
        counts = self._deg[frontier]
        total = int(counts.sum())
        if total == 0:
            return np.empty(0, dtype=np.int64)
        cum = np.cumsum(counts)
        idx = np.arange(total, dtype=np.int64)
        pos = np.repeat(self._start[frontier] - (cum - counts), counts) + idx
        nbrs = self._pool[pos]
        cand = nbrs[~visited[nbrs]]
        if cand.size == 0:
            return np.empty(0, dtype=np.int64)
        visited[cand] = True
        # scatter/gather dedup: keep one slot per value without sorting
        ar = np.arange(cand.size, dtype=np.int64)
        scratch[cand] = ar
        return cand[scratch[cand] == ar].astype(np.int64)

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self._node_count:
            raise ValueError(f"node {v} not in graph of size {self._node_count}")

    @staticmethod
    def _grown(arr: np.ndarray) -> np.ndarray:
        out = np.empty(arr.size * 2, dtype=arr.dtype)
        out[:arr.size] = arr
        return out

    def _append_half(self, u: int, v: int) -> None:
        if self._deg[u] == self._cap[u]:
            newcap = max(4, 2 * int(self._cap[u]))
            if self._pool_used + newcap > self._pool.size:
                grown = np.empty(max(self._pool_used + newcap, self._pool.size * 2),
                                 dtype=np.int32)
                grown[:self._pool_used] = self._pool[:self._pool_used]
                self._pool = grown
            d = int(self._deg[u])
            if d:
                s = self._start[u]
                self._pool[self._pool_used:self._pool_used + d] = self._pool[s:s + d]
            self._start[u] = self._pool_used
            self._cap[u] = newcap
            self._pool_used += newcap
        self._pool[self._start[u] + self._deg[u]] = v
        self._deg[u] += 1

    def __repr__(self) -> str:
        return f"Graph(nodes={self._node_count}, edges={self._edge_count})"


def save_edge_list(g: Graph, path: str | Path) -> None:
    """Write one "u v" line per edge (deterministic order, no header)."""
    with open(path, "w") as fh:
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")


def load_edge_list(path: str | Path) -> Graph:
    """Read the edge-list format written by save_edge_list.

    Node count is max id + 1; blank lines and lines starting with '#'
    are skipped.  Duplicate lines and self-loops collapse silently
    (the graph stays simple).
    """
    edges = []
    max_id = -1
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected two node ids, got {line!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer node id in {line!r}") from None
            if u < 0 or v < 0:
                raise ValueError(f"{path}:{lineno}: negative node id in {line!r}")
            edges.append((u, v))
            max_id = max(max_id, u, v)
    return Graph.from_edges(max_id + 1, edges)
