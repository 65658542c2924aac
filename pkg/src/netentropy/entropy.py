"""Structure entropy functionals over node distributions.

Four entropies are provided, all in nats with the information-theoretic
constant k = 1 and the 0*ln(0) = 0 convention:

* Shannon entropy of an arbitrary discrete distribution.
* Degree structure entropy: Shannon entropy of per-node degree shares.
* Betweenness structure entropy: Shannon entropy of betweenness shares,
  with an all-zero betweenness vector (complete graphs) treated as the
  uniform distribution.
* Tsallis structure entropy: Shannon entropy of the basic factor
  ``h_i = p_i^{q_i} / sum_j p_j^{q_j}``, where the per-node nonextensive
  exponent ``q_i = 1 + (max(v) - v_i)`` couples betweenness into the
  degree term. Nodes of maximal betweenness keep ``q = 1`` exactly;
  everything else is suppressed, since ``p_i < 1``.

The powers ``p_i^{q_i}`` are evaluated in log space and shifted by the
largest exponent before normalizing, so huge betweenness gaps cannot
underflow the whole sum.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .centrality import (
    CentralityVector,
    EmptyGraphError,
    PairConvention,
    betweenness,
    degree_distribution,
)
from .graph import Graph

DISTRIBUTION_SUM_TOL = 1e-9


class InvalidDistributionError(ValueError):
    """Weights are negative or do not sum to 1 within tolerance."""


class NonPositiveArgumentError(ValueError):
    """q-logarithm argument must be strictly positive."""


class DegenerateWeightsError(ValueError):
    """The basic-factor normalizer collapsed; carries diagnostics."""


class UpsilonSource(enum.Enum):
    """Which betweenness values feed the nonextensive exponents."""

    RAW = "raw"
    NORMALIZED = "normalized"


@dataclass(frozen=True)
class NonextensiveParams:
    """Per-node exponents plus the conventions that produced them."""

    q: np.ndarray
    upsilon_source: UpsilonSource
    pair_convention: PairConvention


@dataclass(frozen=True)
class EntropyReport:
    """The three structure entropies of one graph, with full provenance."""

    e_deg: float
    e_bet: float
    e_t: float
    node_count: int
    edge_count: int
    pair_convention: PairConvention
    upsilon_source: UpsilonSource
    zero_betweenness_policy: str = "uniform"
    log_base: str = "e"


def _as_distribution(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 1 or w.size == 0:
        raise InvalidDistributionError("expected a non-empty 1-d weight vector")
    if np.any(w < 0):
        raise InvalidDistributionError("negative weight in distribution")
    total = w.sum()
    if abs(total - 1.0) > DISTRIBUTION_SUM_TOL:
        raise InvalidDistributionError(f"weights sum to {total!r}, not 1")
    return w


def shannon_entropy(weights) -> float:
    """-sum(w * ln w) of a normalized weight vector, in nats."""
    w = _as_distribution(weights)
    w = w[w > 0]
    return float(-np.sum(w * np.log(w)))


def q_logarithm(x: float, q: float) -> float:
    """Deformed logarithm ln_q(x) = (x^(1-q) - 1) / (1 - q); ln at q = 1."""
    if not x > 0:
        raise NonPositiveArgumentError(f"ln_q needs x > 0, got {x!r}")
    if q == 1.0:
        return math.log(x)
    return (x ** (1.0 - q) - 1.0) / (1.0 - q)


def tsallis_entropy(weights, q: float) -> float:
    """One-parameter entropy (1 - sum p^q) / (q - 1); Shannon at q = 1.

    The sum runs over the support only, which keeps the value finite for
    q <= 0 in the presence of zero weights and agrees with the q-log-sum
    form -sum(p^q ln_q p).
    """
    w = _as_distribution(weights)
    if q == 1.0:
        w = w[w > 0]
        return float(-np.sum(w * np.log(w)))
    w = w[w > 0]
    return float((1.0 - np.sum(w**q)) / (q - 1.0))


def degree_structure_entropy(g: Graph) -> float:
    """Shannon entropy of the degree-share distribution."""
    return shannon_entropy(degree_distribution(g))


def _betweenness_distribution(cv: CentralityVector) -> np.ndarray:
    if cv.degenerate:
        n = cv.upsilon_raw.size
        return np.full(n, 1.0 / n)
    return cv.upsilon_norm


def betweenness_structure_entropy(
    g: Graph, convention: PairConvention = PairConvention.UNORDERED
) -> float:
    """Shannon entropy of betweenness shares (uniform when all zero)."""
    cv = betweenness(g, convention)
    return shannon_entropy(_betweenness_distribution(cv))


def nonextensive_parameters(
    cv: CentralityVector, source: UpsilonSource = UpsilonSource.RAW
) -> NonextensiveParams:
    """Exponents q_i = 1 + (max(v) - v_i) from raw or normalized betweenness.

    Every node attaining the maximum gets q = 1 exactly; all others
    exceed 1.
    """
    ups = cv.upsilon_raw if source is UpsilonSource.RAW else cv.upsilon_norm
    if ups.size:
        q = 1.0 + (ups.max() - ups)
    else:
        q = np.zeros(0)
    return NonextensiveParams(
        q=q, upsilon_source=source, pair_convention=cv.pair_convention
    )


def basic_factor(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Normalized suppressed degree shares h_i = p_i^{q_i} / sum p_j^{q_j}.

    Computed as exp(q ln p - shift) over the support of p; isolated nodes
    (p_i = 0) get h_i = 0.
    """
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    h = np.zeros_like(p)
    support = p > 0
    if not support.any():
        raise EmptyGraphError("basic factor undefined without degree mass")
    logs = q[support] * np.log(p[support])
    scaled = np.exp(logs - logs.max())
    total = scaled.sum()
    if not np.isfinite(total) or total <= 0.0:
        raise DegenerateWeightsError(
            f"basic-factor normalizer {total!r} from log-weights in "
            f"[{logs.min()!r}, {logs.max()!r}]"
        )
    h[support] = scaled / total
    return h


def tsallis_structure_entropy(
    g: Graph,
    convention: PairConvention = PairConvention.UNORDERED,
    source: UpsilonSource = UpsilonSource.RAW,
) -> tuple[float, NonextensiveParams, np.ndarray]:
    """Tsallis structure entropy with its exponents and basic factor.

    Returns ``(value, params, h)`` so callers can audit exactly which
    distribution was scored.
    """
    p = degree_distribution(g)
    cv = betweenness(g, convention)
    params = nonextensive_parameters(cv, source)
    h = basic_factor(p, params.q)
    return shannon_entropy(h), params, h


def full_report(
    g: Graph,
    convention: PairConvention = PairConvention.UNORDERED,
    source: UpsilonSource = UpsilonSource.RAW,
) -> EntropyReport:
    """All three structure entropies under one set of conventions.

    Betweenness is computed once and shared by the betweenness entropy
    and the nonextensive exponents.
    """
    p = degree_distribution(g)
    cv = betweenness(g, convention)
    params = nonextensive_parameters(cv, source)
    h = basic_factor(p, params.q)
    return EntropyReport(
        e_deg=shannon_entropy(p),
        e_bet=shannon_entropy(_betweenness_distribution(cv)),
        e_t=shannon_entropy(h),
        node_count=g.node_count,
        edge_count=g.edge_count,
        pair_convention=convention,
        upsilon_source=source,
    )
