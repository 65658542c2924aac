"""Degree shares and shortest-path betweenness centrality.

Two routes to betweenness live here on purpose:

* :func:`betweenness` — fast per-source dependency accumulation
  (frontier-batched BFS for uniform weights, lazy-deletion Dijkstra for
  general weights), suitable for 1000-node graphs.
* :func:`brute_force_betweenness` — exhaustive enumeration of every
  shortest path per node pair, guarded to tiny graphs. It shares no
  shortest-path code with the fast route, so agreement between the two is
  evidence of correctness rather than tautology.

Both accumulate per-source contributions in fixed node order, so repeated
runs are bit-identical.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from heapq import heappop, heappush
from math import inf

import numpy as np

from .graph import Graph

ORACLE_NODE_LIMIT = 12


class EmptyGraphError(ValueError):
    """Raised when an operation needs at least one edge and got none."""


class TooLargeForOracleError(ValueError):
    """Raised when brute-force path enumeration would be intractable."""


class PairConvention(enum.Enum):
    """How betweenness sums count node pairs of an undirected graph.

    ``UNORDERED`` counts each {s, t} once (the default for undirected
    graphs); ``ORDERED`` counts (s, t) and (t, s) separately, exactly
    doubling every raw value. Normalized shares are identical under both.
    """

    UNORDERED = "unordered"
    ORDERED = "ordered"


@dataclass(frozen=True)
class CentralityVector:
    """Per-node degree shares and betweenness in raw and normalized form.

    ``degenerate`` flags a graph whose betweenness is zero everywhere
    (e.g. complete graphs), in which case ``upsilon_norm`` is all zeros.
    ``p`` is all zeros for edgeless graphs.
    """

    p: np.ndarray
    upsilon_raw: np.ndarray
    upsilon_norm: np.ndarray
    pair_convention: PairConvention
    degenerate: bool


@dataclass(frozen=True)
class ShortestPathCounts:
    """All-pairs geodesic distances and shortest-path counts.

    ``sigma[s, t]`` is the number of distinct shortest s-t paths
    (1 on the diagonal); ``dist[s, t]`` is ``inf`` for unreachable pairs.
    """

    sigma: np.ndarray
    dist: np.ndarray


def degree_distribution(g: Graph) -> np.ndarray:
    """Per-node share of total degree; raises on edgeless graphs."""
    if g.edge_count == 0:
        raise EmptyGraphError("degree distribution undefined: graph has no edges")
    deg = np.array(g.degrees(), dtype=np.float64)
    return deg / deg.sum()


def _degree_share_or_zero(g: Graph) -> np.ndarray:
    if g.edge_count == 0:
        return np.zeros(g.node_count)
    deg = np.array(g.degrees(), dtype=np.float64)
    return deg / deg.sum()


def _csr_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.node_count + 1, dtype=np.int64)
    heads: list[int] = []
    for i, nbrs in enumerate(g.adjacency):
        indptr[i + 1] = indptr[i] + len(nbrs)
        heads.extend(v for v, _ in nbrs)
    return indptr, np.array(heads, dtype=np.int64)


def _accumulate_unit(g: Graph) -> np.ndarray:
    """Ordered-pair betweenness via frontier-batched BFS accumulation."""
    n = g.node_count
    cb = np.zeros(n)
    if n == 0 or g.edge_count == 0:
        return cb
    indptr, indices = _csr_arrays(g)
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        sigma = np.zeros(n)
        dist[s] = 0
        sigma[s] = 1.0
        frontier = np.array([s], dtype=np.int64)
        levels: list[tuple[np.ndarray, np.ndarray]] = []
        d = 0
        while frontier.size:
            starts = indptr[frontier]
            counts = indptr[frontier + 1] - starts
            total = int(counts.sum())
            if total == 0:
                break
            csum = np.cumsum(counts)
            offsets = np.repeat(starts - np.concatenate(([0], csum[:-1])), counts)
            heads = indices[np.arange(total, dtype=np.int64) + offsets]
            tails = np.repeat(frontier, counts)
            fresh = dist[heads] == -1
            dist[heads[fresh]] = d + 1
            onward = dist[heads] == d + 1
            tails = tails[onward]
            heads = heads[onward]
            np.add.at(sigma, heads, sigma[tails])
            levels.append((tails, heads))
            frontier = np.unique(heads)
            d += 1
        delta = np.zeros(n)
        for tails, heads in reversed(levels):
            np.add.at(delta, tails, sigma[tails] * ((1.0 + delta[heads]) / sigma[heads]))
        cb += delta
        cb[s] -= delta[s]
    return cb


def _dijkstra_sssp(
    adjacency, s: int, n: int
) -> tuple[list[int], list[list[int]], list[float], list[float]]:
    """Settled order, predecessor lists, path counts and distances from s.

    Equal-distance predecessors are exact float comparisons; weights are
    strictly positive, so a node's count is final when it settles.
    """
    dist = [inf] * n
    sigma = [0.0] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    settled = [False] * n
    order: list[int] = []
    dist[s] = 0.0
    sigma[s] = 1.0
    heap: list[tuple[float, int]] = [(0.0, s)]
    while heap:
        d, v = heappop(heap)
        if settled[v]:
            continue
        settled[v] = True
        order.append(v)
        sv = sigma[v]
        for w, wt in adjacency[v]:
            if settled[w]:
                continue
            nd = d + wt
            if nd < dist[w]:
                dist[w] = nd
                sigma[w] = sv
                preds[w] = [v]
                heappush(heap, (nd, w))
            elif nd == dist[w]:
                sigma[w] += sv
                preds[w].append(v)
    return order, preds, sigma, dist


def _accumulate_weighted(g: Graph) -> np.ndarray:
    """Ordered-pair betweenness via Dijkstra dependency accumulation."""
    n = g.node_count
    cb = [0.0] * n
    for s in range(n):
        order, preds, sigma, _ = _dijkstra_sssp(g.adjacency, s, n)
        delta = [0.0] * n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                cb[w] += delta[w]
    return np.array(cb)


def betweenness(
    g: Graph, convention: PairConvention = PairConvention.UNORDERED
) -> CentralityVector:
    """Shortest-path betweenness of every node under the given convention.

    Endpoints never count toward their own pairs, and unreachable pairs
    contribute nothing. Uniform-weight graphs take the hop-count path, so
    scaling all weights by a constant cannot change the result.
    """
    if g.has_uniform_weights():
        raw = _accumulate_unit(g)
    else:
        raw = _accumulate_weighted(g)
    if convention is PairConvention.UNORDERED:
        raw = raw / 2.0
    total = raw.sum()
    degenerate = not total > 0.0
    norm = np.zeros_like(raw) if degenerate else raw / total
    return CentralityVector(
        p=_degree_share_or_zero(g),
        upsilon_raw=raw,
        upsilon_norm=norm,
        pair_convention=convention,
        degenerate=degenerate,
    )


def shortest_path_counts(g: Graph) -> ShortestPathCounts:
    """All-pairs distance and path-count matrices (fast per-source route)."""
    n = g.node_count
    sigma = np.zeros((n, n))
    dist = np.full((n, n), inf)
    if g.has_uniform_weights():
        w0 = g.edges[0][2] if g.edges else 1.0
        for s in range(n):
            drow, srow = _bfs_counts(g.adjacency, s, n)
            sigma[s] = srow
            dist[s] = [d * w0 if d >= 0 else inf for d in drow]
    else:
        for s in range(n):
            _, _, srow, drow = _dijkstra_sssp(g.adjacency, s, n)
            sigma[s] = srow
            dist[s] = drow
    return ShortestPathCounts(sigma=sigma, dist=dist)


def _bfs_counts(adjacency, s: int, n: int) -> tuple[list[int], list[float]]:
    dist = [-1] * n
    sigma = [0.0] * n
    dist[s] = 0
    sigma[s] = 1.0
    queue = [s]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        dv1 = dist[v] + 1
        sv = sigma[v]
        for w, _ in adjacency[v]:
            if dist[w] < 0:
                dist[w] = dv1
                queue.append(w)
            if dist[w] == dv1:
                sigma[w] += sv
    return dist, sigma


# --- brute-force oracle route -------------------------------------------
#
# Everything below recomputes betweenness from first principles: an
# all-pairs distance matrix (Floyd-Warshall) followed by explicit
# enumeration of every shortest path. Exponential, test-only.


def _floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.node_count
    dist = [[inf] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0.0
    for u, v, w in g.edges:
        dist[u][v] = w
        dist[v][u] = w
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist

def _enumerate_shortest_paths(g: Graph, dist, s: int, t: int) -> list[list[int]]:
    """Every node sequence realizing the s-t geodesic distance."""
    paths: list[list[int]] = []
    target = dist[s][t]
    stack: list[tuple[int, float, list[int]]] = [(s, 0.0, [s])]
    while stack:
        u, spent, path = stack.pop()
        if u == t:
            paths.append(path)
            continue
        for v, w in g.adjacency[u]:
            if spent + w + dist[v][t] == target:
                stack.append((v, spent + w, path + [v]))
    return paths


def brute_force_betweenness(
    g: Graph, convention: PairConvention = PairConvention.UNORDERED
) -> CentralityVector:
    """Betweenness by exhaustive shortest-path enumeration (n <= 12)."""
    n = g.node_count
    if n > ORACLE_NODE_LIMIT:
        raise TooLargeForOracleError(
            f"{n} nodes exceeds the oracle limit of {ORACLE_NODE_LIMIT}"
        )
    dist = _floyd_warshall(g)
    raw = [0.0] * n
    if convention is PairConvention.UNORDERED:
        pairs = [(s, t) for s in range(n) for t in range(s + 1, n)]
    else:
        pairs = [(s, t) for s in range(n) for t in range(n) if s != t]
    for s, t in pairs:
        if dist[s][t] == inf:
            continue
        paths = _enumerate_shortest_paths(g, dist, s, t)
        passes = [0] * n
        for path in paths:
            for i in path[1:-1]:
                passes[i] += 1
        sigma_st = len(paths)
        for i in range(n):
            if passes[i]:
                raw[i] += passes[i] / sigma_st
    raw_arr = np.array(raw)
    total = raw_arr.sum()
    degenerate = not total > 0.0
    norm = np.zeros_like(raw_arr) if degenerate else raw_arr / total
    return CentralityVector(
        p=_degree_share_or_zero(g),
        upsilon_raw=raw_arr,
        upsilon_norm=norm,
        pair_convention=convention,
        degenerate=degenerate,
    )
