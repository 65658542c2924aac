"""Reference topologies and the iterated hub-growth procedure.

The growth procedure starts from a ring lattice and alternates two moves
for a configured number of iterations:

1. every node, independently with ``random_link_prob``, gains one edge to
   a uniformly random non-neighbor;
2. the current top-degree fraction of nodes forms the central set, and
   every node attaches to one central node ``c`` with probability
   ``attach_prob_scale * degree(c) / sum(central degrees)``.

Self-loops and already-present edges are skipped. Node count never
changes; edges only accumulate, so a connected seed stays connected.
Everything is driven by one seeded generator with draws made in fixed
node order, which makes traces byte-reproducible.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .centrality import PairConvention
from .entropy import UpsilonSource, tsallis_structure_entropy
from .graph import Graph, build_graph


class InvalidRingParamsError(ValueError):
    """Ring lattice needs n > 2k >= 2."""


class InvalidSizeError(ValueError):
    """Dumbbell needs an even node count of at least 6."""


@dataclass(frozen=True)
class GrowthConfig:
    """All knobs of the iterated growth procedure."""

    seed_nodes: int = 100
    neighbor_k: int = 2
    iterations: int = 50
    random_link_prob: float = 0.05
    central_fraction: float = 0.05
    attach_prob_scale: float = 1.0
    rng_seed: int = 0

    def __post_init__(self):
        if self.seed_nodes < 3:
            raise ValueError(f"seed_nodes must be >= 3, got {self.seed_nodes}")
        if self.neighbor_k < 1:
            raise ValueError(f"neighbor_k must be >= 1, got {self.neighbor_k}")
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")
        if not 0.0 <= self.random_link_prob <= 1.0:
            raise ValueError(f"random_link_prob outside [0, 1]: {self.random_link_prob}")
        if not 0.0 < self.central_fraction <= 1.0:
            raise ValueError(f"central_fraction outside (0, 1]: {self.central_fraction}")
        if not 0.0 < self.attach_prob_scale <= 1.0:
            raise ValueError(f"attach_prob_scale outside (0, 1]: {self.attach_prob_scale}")


@dataclass(frozen=True)
class GrowthSnapshot:
    iteration: int
    node_count: int
    edge_count: int
    e_t: float


@dataclass(frozen=True)
class GrowthTrace:
    """Per-iteration snapshots, entry 0 being the untouched seed lattice."""

    snapshots: tuple[GrowthSnapshot, ...]

    def e_t_at(self, iteration: int) -> float:
        return self.snapshots[iteration].e_t


def complete_graph(n: int) -> Graph:
    """Every pair of the n nodes adjacent, unit weights."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def ring_lattice(n: int, k: int) -> Graph:
    """Each node joined to its k nearest neighbors per side (degree 2k)."""
    if not n > 2 * k >= 2:
        raise InvalidRingParamsError(f"need n > 2k >= 2, got n={n}, k={k}")
    edges = []
    for i in range(n):
        for j in range(1, k + 1):
            edges.append((i, (i + j) % n))
    return build_graph(n, edges)


def dumbbell(n: int) -> Graph:
    """Two complete clusters of n/2 nodes joined by one bridge edge."""
    if n < 6 or n % 2:
        raise InvalidSizeError(f"dumbbell needs even n >= 6, got {n}")
    half = n // 2
    edges = [(u, v) for u in range(half) for v in range(u + 1, half)]
    edges += [(u, v) for u in range(half, n) for v in range(u + 1, n)]
    edges.append((half - 1, half))
    return build_graph(n, edges)


def grow_scale_free(
    cfg: GrowthConfig,
    trace_convention: PairConvention = PairConvention.UNORDERED,
    trace_source: UpsilonSource = UpsilonSource.RAW,
) -> tuple[Graph, GrowthTrace]:
    """Run the growth procedure, recording E_T after every iteration.

    ``trace_convention``/``trace_source`` pick the betweenness conventions
    used for the recorded entropy values. The same ``rng_seed`` always
    yields the same graph and trace; two runs differing only in
    ``iterations`` agree on their common prefix.
    """
    rng = np.random.default_rng(cfg.rng_seed)
    n = cfg.seed_nodes
    seed = ring_lattice(n, cfg.neighbor_k)
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []
    for u, v, _ in seed.edges:
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
        edges.append((u, v))

    def add_edge(u: int, v: int) -> None:
        if u > v:
            u, v = v, u
        edges.append((u, v))
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    def snapshot(iteration: int) -> GrowthSnapshot:
        g = build_graph(n, edges)
        e_t, _, _ = tsallis_structure_entropy(g, trace_convention, trace_source)
        return GrowthSnapshot(iteration, n, len(edges), e_t)

    snaps = [snapshot(0)]
    for iteration in range(1, cfg.iterations + 1):
        # random links, one candidate draw per selected node
        for u in range(n):
            if rng.random() < cfg.random_link_prob:
                candidates = sorted(set(range(n)) - neighbor_sets[u] - {u})
                if candidates:
                    add_edge(u, candidates[int(rng.integers(len(candidates)))])
        # preferential attachment to the frozen central set
        degrees = [len(neighbor_sets[i]) for i in range(n)]
        m_central = math.ceil(cfg.central_fraction * n)
        centrals = sorted(range(n), key=lambda i: (-degrees[i], i))[:m_central]
        total = sum(degrees[c] for c in centrals)
        cumulative = []
        acc = 0.0
        for c in centrals:
            acc += cfg.attach_prob_scale * degrees[c] / total
            cumulative.append(acc)
        for u in range(n):
            r = rng.random()
            idx = bisect_right(cumulative, r)
            if idx < len(centrals):
                c = centrals[idx]
                if c != u and c not in neighbor_sets[u]:
                    add_edge(u, c)
        snaps.append(snapshot(iteration))
    return build_graph(n, edges), GrowthTrace(tuple(snaps))
