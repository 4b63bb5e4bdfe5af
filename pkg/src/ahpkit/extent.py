"""Extent analysis: crisp weights from a fuzzy comparison matrix.

Row sums are scaled by the inverse of the matrix grand total to give one
synthetic extent per element; each element's raw weight is the worst degree
of possibility that its extent dominates every other, and the raw vector is
normalized.  Elements whose extent is strictly dominated get weight zero,
which is a legal (and common) outcome of the method.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .comparison import WeightVector
from .errors import DegenerateTotal, DegenerateWeights
from .fuzzy import FuzzyMatrix, Tfn, tfn_add

logger = logging.getLogger(__name__)

_CLAMP_LOG_EXCESS = 1e-9


@dataclass(frozen=True)
class ExtentSet:
    """Synthetic extents S_i plus the grand total they were scaled by."""

    extents: tuple[Tfn, ...]
    total: Tfn

    def __len__(self) -> int:
        return len(self.extents)


@dataclass(frozen=True)
class PossibilityMatrix:
    """Pairwise dominance possibilities; entry (i, j) is V(S_i >= S_j)."""

    values: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = len(self.values)
        for i in range(n):
            if abs(self.values[i][i] - 1.0) > 1e-12:
                raise ValueError("possibility diagonal must be 1")
            for j in range(n):
                v = self.values[i][j]
                if v < 0.0 or v > 1.0:
                    raise ValueError(f"possibility out of [0,1]: {v!r}")
                if max(self.values[i][j], self.values[j][i]) < 1.0 - 1e-12:
                    raise ValueError(f"neither of pair ({i},{j}) attains possibility 1")


def synthetic_extents(fm: FuzzyMatrix) -> ExtentSet:
    """Row sums times the inverted grand total (components cross-divided)."""
    n = fm.order
    zero = Tfn(0.0, 0.0, 0.0)
    row_sums = []
    for i in range(n):
        s = zero
        for j in range(n):
            s = tfn_add(s, fm.entries[i][j])
        row_sums.append(s)
    total = zero
    for s in row_sums:
        total = tfn_add(total, s)
    if total.l == 0.0 or total.m == 0.0 or total.u == 0.0:
        raise DegenerateTotal("matrix grand total has a zero component")
    extents = tuple(Tfn(s.l / total.u, s.m / total.m, s.u / total.l) for s in row_sums)
    return ExtentSet(extents=extents, total=total)


def possibility(n1: Tfn, n2: Tfn) -> float:
    """Degree of possibility that n1 >= n2.

    1 when n1 peaks at or above n2's peak; 0 when the supports are disjoint
    with n1 entirely below; otherwise the height of the intersection between
    n1's falling edge and n2's rising edge.
    """
    if n1.m >= n2.m:
        return 1.0
    if n2.l >= n1.u:
        return 0.0
    v = (n2.l - n1.u) / ((n1.m - n1.u) - (n2.m - n2.l))
    if v < 0.0 or v > 1.0:
        excess = max(-v, v - 1.0)
        if excess > _CLAMP_LOG_EXCESS:
            logger.warning("possibility value %r clamped into [0, 1]", v)
        v = min(max(v, 0.0), 1.0)
    return v


def possibility_matrix(es: ExtentSet) -> PossibilityMatrix:
    n = len(es)
    vals = tuple(
        tuple(1.0 if i == j else possibility(es.extents[i], es.extents[j]) for j in range(n))
        for i in range(n)
    )
    return PossibilityMatrix(vals)


def extent_weights(fm: FuzzyMatrix) -> WeightVector:
    """Crisp weights: min-dominance possibilities, normalized."""
    es = synthetic_extents(fm)
    n = len(es)
    raw = np.ones(n)
    for i in range(n):
        for k in range(n):
            if k != i:
                raw[i] = min(raw[i], possibility(es.extents[i], es.extents[k]))
    s = raw.sum()
    if s == 0.0:
        raise DegenerateWeights("every extent is strictly dominated; judgments admit no weights")
    w = raw / s
    return WeightVector(tuple(float(x) for x in w), "extent")
