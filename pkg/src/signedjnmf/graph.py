"""Signed adjacency storage, its nonnegative split, and confidence weights.

A signed graph is kept as one dense symmetric matrix with mixed signs.
The solver consumes the derived pair (A+, A-) of nonnegative parts plus a
two-valued weight mask that marks observed relations as high-confidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, ShapeError, ValidationError


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class SignedGraph:
    """Symmetric signed adjacency matrix with display labels per node.

    Invariants enforced at construction: the matrix is square and exactly
    symmetric, the diagonal is zero (no self-loops), and n >= 2. Asymmetric
    input is rejected rather than symmetrized so data errors stay visible.
    """

    adjacency: np.ndarray
    node_labels: tuple[str, ...] = ()

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ShapeError(f"adjacency must be square, got shape {a.shape}")
        n = a.shape[0]
        if n < 2:
            raise ValidationError("a signed graph needs at least 2 nodes")
        if not np.all(np.isfinite(a)):
            raise ValidationError("adjacency contains non-finite entries")
        if not np.array_equal(a, a.T):
            raise ValidationError("adjacency is not exactly symmetric")
        if np.any(np.diag(a) != 0):
            raise ValidationError("adjacency has nonzero diagonal entries (self-loops)")
        labels = self.node_labels or tuple(str(i) for i in range(n))
        if len(labels) != n:
            raise ValidationError(f"expected {n} node labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise ValidationError("node labels must be unique")
        object.__setattr__(self, "adjacency", _readonly(a))
        object.__setattr__(self, "node_labels", tuple(str(t) for t in labels))

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]


@dataclass(frozen=True)
class SignedSplit:
    """Nonnegative decomposition A = a_plus - a_minus with disjoint support."""

    a_plus: np.ndarray
    a_minus: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a_plus", _readonly(self.a_plus))
        object.__setattr__(self, "a_minus", _readonly(self.a_minus))

    @property
    def n(self) -> int:
        return self.a_plus.shape[0]


@dataclass(frozen=True)
class WeightMask:
    """Two-valued confidence weights: high where a relation is observed."""

    b: np.ndarray
    high_weight: float
    low_weight: float

    def __post_init__(self):
        object.__setattr__(self, "b", _readonly(self.b))


def split_adjacency(graph: SignedGraph) -> SignedSplit:
    """Separate the adjacency into nonnegative positive/negative parts.

    a_plus holds the positive entries, a_minus the magnitudes of the
    negative entries; elementwise at most one of the two is nonzero and
    a_plus - a_minus reconstructs the adjacency exactly.
    """
    a = graph.adjacency
    return SignedSplit(np.where(a > 0, a, 0.0), np.where(a < 0, -a, 0.0))


def build_weight_mask(graph: SignedGraph, high: float = 5.0, low: float = 1.0) -> WeightMask:
    """Weight mask taking `high` on observed relations and `low` elsewhere."""
    if high <= 0 or low <= 0:
        raise ParameterError(f"weights must be positive, got high={high}, low={low}")
    b = np.where(graph.adjacency != 0, float(high), float(low))
    return WeightMask(b, float(high), float(low))


@dataclass(frozen=True)
class GraphStats:
    n: int
    positive_edges: int
    negative_edges: int
    mean_abs_degree: float


def graph_stats(graph: SignedGraph) -> GraphStats:
    """Node count, signed edge counts (each undirected edge once), and the
    mean absolute degree (equals 2*edges/n on unit-weight graphs)."""
    a = graph.adjacency
    iu = np.triu_indices(graph.n, k=1)
    upper = a[iu]
    pos = int((upper > 0).sum())
    neg = int((upper < 0).sum())
    mean_deg = float(np.abs(a).sum() / graph.n)
    return GraphStats(graph.n, pos, neg, mean_deg)
