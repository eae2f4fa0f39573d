"""Hard community assignments over a fixed node order."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError


@dataclass(frozen=True)
class Partition:
    """Assignment of every node (by index) to one of c contiguous labels.

    Labels run from 0 to c-1 with no empty communities; `sizes[k]` is the
    member count of community k.
    """

    assignment: np.ndarray
    c: int
    sizes: np.ndarray
    n: int

    def __post_init__(self):
        a = np.asarray(self.assignment, dtype=int)
        if a.ndim != 1 or len(a) != self.n:
            raise ValidationError("assignment must be a vector of length n")
        if self.c < 1 or a.min() < 0 or a.max() != self.c - 1:
            raise ValidationError("labels must be contiguous from 0 to c-1")
        sizes = np.bincount(a, minlength=self.c)
        if np.any(sizes == 0):
            raise ValidationError("empty community label present")
        a.flags.writeable = False
        sizes.flags.writeable = False
        object.__setattr__(self, "assignment", a)
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        """Build a partition from arbitrary labels, compacting them to 0..c-1
        (empty labels dropped, numeric order preserved)."""
        labels = np.asarray(labels)
        uniq, inv = np.unique(labels, return_inverse=True)
        return cls(assignment=inv, c=len(uniq), sizes=np.bincount(inv), n=len(labels))

    def members(self, label: int) -> np.ndarray:
        return np.where(self.assignment == label)[0]
