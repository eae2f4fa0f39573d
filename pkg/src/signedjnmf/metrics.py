"""Partition agreement scoring via normalized mutual information."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .partition import Partition


@dataclass(frozen=True)
class ConfusionTable:
    """Cross-tabulation n_ij of two partitions over the same node set."""

    counts: np.ndarray
    row_sums: np.ndarray
    col_sums: np.ndarray
    n: int


def confusion(truth: Partition, detected: Partition) -> ConfusionTable:
    """Count nodes falling in truth community i and detected community j."""
    if truth.n != detected.n:
        raise ShapeError(f"partitions cover {truth.n} vs {detected.n} nodes")
    counts = np.zeros((truth.c, detected.c))
    np.add.at(counts, (truth.assignment, detected.assignment), 1.0)
    return ConfusionTable(counts, counts.sum(axis=1), counts.sum(axis=0), truth.n)


def nmi(truth: Partition, detected: Partition) -> float:
    """Normalized mutual information in [0, 1], natural log, with the
    convention 0*log(0) = 0.

    When either partition is a single community its entropy is zero and the
    normalization degenerates; the limit-consistent value is 1 for identical
    partitions and 0 otherwise.
    """
    table = confusion(truth, detected)
    if truth.c == 1 or detected.c == 1:
        return 1.0 if truth.c == detected.c == 1 else 0.0
    counts, ri, cj, n = table.counts, table.row_sums, table.col_sums, table.n
    nz = counts > 0
    num = float((counts[nz] * np.log(counts[nz] * n / np.outer(ri, cj)[nz])).sum())
    h1 = -float((ri * np.log(ri / n)).sum())
    h2 = -float((cj * np.log(cj / n)).sum())
    return num / np.sqrt(h1 * h2)
