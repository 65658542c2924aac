"""Test-suite oracles: small-graph sampling and report cross-checking.

The recomputation here deliberately avoids every fast-path helper. Degrees
are counted straight off the edge list, entropies are naive ``math.log``
loops, and the basic factor is formed with direct powers (safe at oracle
sizes, where exponents stay small). Betweenness comes from the exhaustive
path enumerator. Agreement with the production code is therefore evidence,
not a tautology.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from .centrality import ORACLE_NODE_LIMIT, PairConvention, brute_force_betweenness
from .entropy import EntropyReport, UpsilonSource
from .graph import Graph, build_graph, is_connected


@dataclass(frozen=True)
class OracleCase:
    graph: Graph
    expected: EntropyReport
    tolerance: float
    name: str = ""

    def __post_init__(self):
        if self.graph.node_count > ORACLE_NODE_LIMIT:
            raise ValueError(
                f"oracle cases are limited to {ORACLE_NODE_LIMIT} nodes, "
                f"got {self.graph.node_count}"
            )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    deltas: dict[str, float]
    tolerance: float

    @property
    def max_delta(self) -> float:
        return max(self.deltas.values())


def enumerate_small_graphs(
    n: int,
    sample: int,
    rng_seed: int,
    weight_choices=None,
) -> Iterator[Graph]:
    """Connected random graphs on n nodes, uniform over edge subsets.

    Rejection sampling: draw each of the n(n-1)/2 possible edges with
    probability 1/2 and keep connected outcomes. Optional
    ``weight_choices`` assigns each kept edge a weight drawn uniformly
    from that sequence; the stream is fully determined by ``rng_seed``.
    """
    if n > 8:
        raise ValueError(f"sampling is limited to n <= 8, got {n}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = np.random.default_rng(rng_seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    produced = 0
    while produced < sample:
        if not pairs:
            yield build_graph(n, [])
            produced += 1
            continue
        mask = rng.random(len(pairs)) < 0.5
        edges = [p for p, keep in zip(pairs, mask) if keep]
        if weight_choices is not None:
            edges = [
                (u, v, weight_choices[int(rng.integers(len(weight_choices)))])
                for u, v in edges
            ]
        g = build_graph(n, edges)
        if is_connected(g):
            yield g
            produced += 1


def _naive_shannon(weights) -> float:
    total = 0.0
    for w in weights:
        if w > 0:
            total -= w * math.log(w)
    return total


def recompute_report(
    graph: Graph,
    convention: PairConvention,
    source: UpsilonSource,
) -> tuple[float, float, float]:
    """(e_deg, e_bet, e_t) by direct summation, independent of the fast path."""
    n = graph.node_count
    counts = [0] * n
    for u, v, _ in graph.edges:
        counts[u] += 1
        counts[v] += 1
    total_degree = sum(counts)
    p = [c / total_degree for c in counts]
    e_deg = _naive_shannon(p)

    cv = brute_force_betweenness(graph, convention)
    ups = [float(x) for x in cv.upsilon_raw]
    total_ups = sum(ups)
    shares = [u / total_ups for u in ups] if total_ups > 0 else [1.0 / n] * n
    e_bet = _naive_shannon(shares)

    basis = ups if source is UpsilonSource.RAW else (
        shares if total_ups > 0 else [0.0] * n
    )
    top = max(basis)
    powers = [p[i] ** (1.0 + top - basis[i]) if p[i] > 0 else 0.0 for i in range(n)]
    z = sum(powers)
    e_t = _naive_shannon([x / z for x in powers])
    return e_deg, e_bet, e_t


def cross_check(case: OracleCase) -> CheckResult:
    """Compare an expected report against oracle recomputation.

    Failures are data (a result with deltas), never exceptions.
    """
    e_deg, e_bet, e_t = recompute_report(
        case.graph, case.expected.pair_convention, case.expected.upsilon_source
    )
    deltas = {
        "e_deg": abs(e_deg - case.expected.e_deg),
        "e_bet": abs(e_bet - case.expected.e_bet),
        "e_t": abs(e_t - case.expected.e_t),
    }
    return CheckResult(
        name=case.name,
        passed=all(d <= case.tolerance for d in deltas.values()),
        deltas=deltas,
        tolerance=case.tolerance,
    )


def write_case_results(results, path) -> None:
    """Machine-readable JSON-lines log of cross-check outcomes."""
    lines = []
    for r in results:
        lines.append(
            json.dumps(
                {
                    "name": r.name,
                    "passed": r.passed,
                    "deltas": {k: r.deltas[k] for k in sorted(r.deltas)},
                    "tolerance": r.tolerance,
                },
                sort_keys=True,
            )
        )
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))
