"""Weighted undirected graph core.

Vertices are dense integer ids ``0..n-1`` and edges carry dense ids
``0..m-1`` in construction order. Everything downstream (shortest paths,
stretch, betweenness, the greedy loop) works on the CSR arrays stored
here and is deterministic: shortest-path ties are broken towards the
smallest predecessor edge id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels

INF = math.inf


class Graph:
    """Immutable weighted undirected graph.

    Edge costs must be finite and non-negative (zero is allowed); self
    loops and parallel edges are rejected. ``n`` may exceed the largest
    endpoint to allow isolated vertices.
    """

    def __init__(self, edge_triples, n=None):
        us, vs, costs = [], [], []
        seen = set()
        for idx, (u, v, c) in enumerate(edge_triples):
            u = int(u)
            v = int(v)
            c = float(c)
            if u == v:
                raise ValueError(f"edge {idx}: self-loop at vertex {u}")
            if u < 0 or v < 0:
                raise ValueError(f"edge {idx}: negative vertex id")
            if not math.isfinite(c) or c < 0.0:
                raise ValueError(f"edge {idx}: cost must be finite and >= 0, got {c}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"edge {idx}: duplicate undirected edge {key}")
            seen.add(key)
            us.append(u)
            vs.append(v)
            costs.append(c)

        m = len(us)
        max_id = max(max(us, default=-1), max(vs, default=-1))
        if n is None:
            n = max_id + 1
        elif max_id >= n:
            raise ValueError(f"vertex id {max_id} out of range for n={n}")

        self.n = int(n)
        self.m = m
        self.edge_u = np.asarray(us, dtype=np.int32)
        self.edge_v = np.asarray(vs, dtype=np.int32)
        self.cost = np.asarray(costs, dtype=np.float64)

        # CSR adjacency; per vertex the incident edges appear in ascending
        # edge-id order, which the deterministic tie-breaks rely on.
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in zip(us, vs):
            deg[u] += 1
            deg[v] += 1
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        np.cumsum(deg, out=indptr[1:])
        fill = indptr[:-1].copy()
        nbr_vertex = np.zeros(2 * m, dtype=np.int32)
        nbr_edge = np.zeros(2 * m, dtype=np.int32)
        for e, (u, v) in enumerate(zip(us, vs)):
            nbr_vertex[fill[u]] = v
            nbr_edge[fill[u]] = e
            fill[u] += 1
            nbr_vertex[fill[v]] = u
            nbr_edge[fill[v]] = e
            fill[v] += 1
        self.indptr = indptr
        self.nbr_vertex = nbr_vertex
        self.nbr_edge = nbr_edge

    def total_cost(self) -> float:
        return float(self.cost.sum())

    def degree(self, v) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def incident(self, v):
        """Edge ids incident to ``v`` in ascending order."""
        return self.nbr_edge[self.indptr[v]:self.indptr[v + 1]]

    def endpoints(self, e):
        return int(self.edge_u[e]), int(self.edge_v[e])

    def full_mask(self) -> np.ndarray:
        return np.ones(self.m, dtype=np.uint8)

    def adjacency_consistent(self) -> bool:
        """Round-trip check between the edge list and the CSR index."""
        pairs = set()
        for v in range(self.n):
            for i in range(self.indptr[v], self.indptr[v + 1]):
                e = int(self.nbr_edge[i])
                w = int(self.nbr_vertex[i])
                if {self.edge_u[e], self.edge_v[e]} != {v, w}:
                    return False
                pairs.add((min(v, w), max(v, w), e))
        expect = {(min(int(u), int(v)), max(int(u), int(v)), e)
                  for e, (u, v) in enumerate(zip(self.edge_u, self.edge_v))}
        return pairs == expect


def build_graph(edge_triples, n=None) -> Graph:
    """Build a :class:`Graph` from ``(u, v, cost)`` triples."""
    return Graph(edge_triples, n=n)


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of edge ids with its total actual cost."""

    mask: np.ndarray
    total_cost: float

    @staticmethod
    def from_mask(g: Graph, mask) -> "EdgeSubset":
        mask = np.ascontiguousarray(mask, dtype=np.uint8)
        if mask.shape != (g.m,):
            raise ValueError("mask length must equal edge count")
        cost = float(g.cost[mask.view(bool)].sum())
        return EdgeSubset(mask, cost)

    @staticmethod
    def from_ids(g: Graph, ids) -> "EdgeSubset":
        mask = np.zeros(g.m, dtype=np.uint8)
        for e in ids:
            if not 0 <= e < g.m:
                raise ValueError(f"edge id {e} out of range")
            mask[e] = 1
        return EdgeSubset.from_mask(g, mask)

    @staticmethod
    def empty(g: Graph) -> "EdgeSubset":
        return EdgeSubset(np.zeros(g.m, dtype=np.uint8), 0.0)

    @staticmethod
    def full(g: Graph) -> "EdgeSubset":
        return EdgeSubset(g.full_mask(), g.total_cost())

    def ids(self) -> np.ndarray:
        return np.nonzero(self.mask)[0]

    def __contains__(self, e) -> bool:
        return bool(self.mask[e])

    def __len__(self) -> int:
        return int(self.mask.sum())


@dataclass(frozen=True)
class PathResult:
    """Shortest-path answer: total length plus the edge ids walked s->t."""

    distance: float
    path: tuple = ()


def _as_mask(g: Graph, restrict) -> np.ndarray:
    if restrict is None:
        return g.full_mask()
    if isinstance(restrict, EdgeSubset):
        return restrict.mask
    return np.ascontiguousarray(restrict, dtype=np.uint8)


def _extract_path(g: Graph, pred, s, t):
    path = []
    v = t
    while v != s:
        e = pred[v]
        if e < 0:
            return ()
        path.append(int(e))
        u, w = g.endpoints(e)
        v = u if w == v else w
    path.reverse()
    return tuple(path)


def shortest_path(g: Graph, lengths, restrict, s, t) -> PathResult:
    """Minimum-total-length walk from ``s`` to ``t`` over the allowed edges.

    ``lengths`` is a per-edge-id array (non-negative, finite); ``restrict``
    is an :class:`EdgeSubset`, a mask, or ``None`` for all edges. Returns
    distance ``inf`` with an empty path when ``t`` is unreachable; the
    path is empty for ``s == t`` as well.
    """
    if not 0 <= s < g.n or not 0 <= t < g.n:
        raise ValueError("vertex id out of range")
    lengths = np.ascontiguousarray(lengths, dtype=np.float64)
    mask = _as_mask(g, restrict)
    if s == t:
        return PathResult(0.0, ())
    dist, pred, _ = kernels.dijkstra(g.indptr, g.nbr_vertex, g.nbr_edge,
                                     lengths, mask, int(s), None, True)
    d = dist[t]
    if d == INF:
        return PathResult(INF, ())
    return PathResult(float(d), _extract_path(g, pred, s, t))


def pair_distances(g: Graph, lengths, mask, src, dst) -> np.ndarray:
    """Shortest distances for aligned vertex pairs ``(src[i], dst[i])``.

    Groups pairs by source (first-appearance order) so each distinct
    source costs one early-exiting single-source pass.
    """
    lengths = np.ascontiguousarray(lengths, dtype=np.float64)
    out = np.empty(len(src), dtype=np.float64)
    groups: dict[int, list[int]] = {}
    for i, s in enumerate(src):
        groups.setdefault(int(s), []).append(i)
    for s, idxs in groups.items():
        targets = np.asarray([int(dst[i]) for i in idxs], dtype=np.int32)
        dist, _, _ = kernels.dijkstra(g.indptr, g.nbr_vertex, g.nbr_edge,
                                      lengths, mask, s, targets, False)
        for i in idxs:
            out[i] = dist[int(dst[i])]
    return out


class DisjointSets:
    """Union-find over the vertex set with incremental edge insertion."""

    __slots__ = ("parent", "rank", "count")

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.count = n

    def find(self, x) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.count -= 1
        return True

    def same(self, a, b) -> bool:
        return self.find(a) == self.find(b)

    def add_edge(self, u, v) -> bool:
        return self.union(u, v)

    def clone(self) -> "DisjointSets":
        other = DisjointSets.__new__(DisjointSets)
        other.parent = self.parent.copy()
        other.rank = self.rank.copy()
        other.count = self.count
        return other

    def labels(self):
        """Canonical component label (root id) per vertex."""
        return [self.find(v) for v in range(len(self.parent))]


def components(g: Graph, subset) -> DisjointSets:
    """Connected components of ``(V, subset)`` as a union-find structure."""
    mask = _as_mask(g, subset)
    ds = DisjointSets(g.n)
    for e in np.nonzero(mask)[0]:
        ds.add_edge(int(g.edge_u[e]), int(g.edge_v[e]))
    return ds
