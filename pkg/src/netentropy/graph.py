"""Undirected simple graph with validation and adjacency queries.

The graph is immutable after construction: every analysis routine in this
package can safely share a single instance across workers. Node ids are
dense integers ``0..n-1``. Edge weights are strictly positive and affect
shortest paths only; the degree of a node is always its edge count.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(ValueError):
    """Base class for graph construction/validation failures."""


class SelfLoopError(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop at node {u}")
        self.node = u


class DuplicateEdgeError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (u, v)


class NonPositiveWeightError(GraphError):
    def __init__(self, u: int, v: int, w: float):
        super().__init__(f"edge ({u}, {v}) has non-positive weight {w!r}")
        self.edge = (u, v)
        self.weight = w


class NodeOutOfRangeError(GraphError):
    def __init__(self, node: int, node_count: int):
        super().__init__(f"node {node} outside [0, {node_count})")
        self.node = node


@dataclass(frozen=True)
class Graph:
    """Validated undirected simple graph.

    ``edges`` is canonical: each pair stored once as ``(u, v, w)`` with
    ``u < v``, sorted lexicographically. ``adjacency[i]`` lists
    ``(neighbor, weight)`` sorted by neighbor id, so identical edge sets
    always produce identical graphs regardless of input order.
    """

    node_count: int
    edges: tuple[tuple[int, int, float], ...]
    adjacency: tuple[tuple[tuple[int, float], ...], ...] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, i: int) -> int:
        """Number of edges incident to node ``i`` (weights ignored)."""
        if not 0 <= i < self.node_count:
            raise NodeOutOfRangeError(i, self.node_count)
        return len(self.adjacency[i])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def neighbors(self, i: int) -> tuple[tuple[int, float], ...]:
        if not 0 <= i < self.node_count:
            raise NodeOutOfRangeError(i, self.node_count)
        return self.adjacency[i]

    def has_uniform_weights(self) -> bool:
        """True when all edge weights are equal (hop counting suffices)."""
        if not self.edges:
            return True
        w0 = self.edges[0][2]
        return all(w == w0 for _, _, w in self.edges)


def build_graph(n: int, edges) -> Graph:
    """Validate and canonicalize an edge list into a :class:`Graph`.

    ``edges`` may contain ``(u, v)`` or ``(u, v, w)`` items; missing
    weights default to 1.0. Raises :class:`SelfLoopError`,
    :class:`DuplicateEdgeError`, :class:`NonPositiveWeightError` or
    :class:`NodeOutOfRangeError` on invariant violations.
    """
    if n < 0:
        raise GraphError(f"node count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    canonical: list[tuple[int, int, float]] = []
    for item in edges:
        if len(item) == 2:
            u, v = item
            w = 1.0
        else:
            u, v, w = item
            w = float(w)
        u = int(u)
        v = int(v)
        for node in (u, v):
            if not 0 <= node < n:
                raise NodeOutOfRangeError(node, n)
        if u == v:
            raise SelfLoopError(u)
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdgeError(u, v)
        if not w > 0.0:
            raise NonPositiveWeightError(u, v, w)
        seen.add((u, v))
        canonical.append((u, v, w))
    canonical.sort()
    adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for u, v, w in canonical:
        adj[u].append((v, w))
        adj[v].append((u, w))
    adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
    return Graph(node_count=n, edges=tuple(canonical), adjacency=adjacency)


def is_connected(g: Graph) -> bool:
    """True iff a single component spans every node (n=0 counts as connected)."""
    n = g.node_count
    if n <= 1:
        return True
    seen = bytearray(n)
    stack = [0]
    seen[0] = 1
    count = 1
    while stack:
        u = stack.pop()
        for v, _ in g.adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == n


def relabel(g: Graph, permutation) -> Graph:
    """Rebuild the graph with node ``i`` renamed ``permutation[i]``.

    Used by invariance tests; the result is a valid graph over the same
    topology.
    """
    perm = list(permutation)
    if sorted(perm) != list(range(g.node_count)):
        raise GraphError("permutation must be a bijection on node ids")
    return build_graph(
        g.node_count, [(perm[u], perm[v], w) for u, v, w in g.edges]
    )
