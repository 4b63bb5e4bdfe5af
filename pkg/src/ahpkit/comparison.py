"""Crisp pairwise-comparison matrices and weight extraction.

A comparison matrix holds positive judgment ratios a_ij ("how strongly does
element i dominate element j"), with unit diagonal and a_ji = 1/a_ij.
Weights are extracted either from the principal eigenvector (power iteration)
or from normalized row geometric means; consistency is scored with the
standard random-index table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailure,
    DiagonalNotOne,
    NonPositiveEntry,
    NonSquare,
    ReciprocityViolation,
    UnsupportedOrder,
)

# Saaty random indices for orders 1..15; CR is undefined past the table.
RANDOM_INDEX = (0.0, 0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49, 1.51, 1.54, 1.56, 1.57, 1.58)

CR_THRESHOLD = 0.10

STRICT_RECIPROCITY_TOL = 1e-9
LENIENT_RECIPROCITY_TOL = 0.05

POWER_ITERATION_TOL = 1e-12
POWER_ITERATION_CAP = 10_000


def default_labels(n: int, prefix: str = "E") -> tuple[str, ...]:
    return tuple(f"{prefix}{i + 1}" for i in range(n))


class ComparisonMatrix:
    """Validated square positive reciprocal matrix of crisp judgments.

    Instances are immutable; construct through :func:`validate_matrix` or
    :func:`repair_matrix` unless the data is already known-good.
    """

    __slots__ = ("entries", "labels")

    def __init__(self, entries: np.ndarray, labels: tuple[str, ...]):
        a = np.array(entries, dtype=float)
        a.setflags(write=False)
        self.entries = a
        self.labels = tuple(labels)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ComparisonMatrix)
            and self.labels == other.labels
            and np.array_equal(self.entries, other.entries)
        )

    def __repr__(self) -> str:
        return f"ComparisonMatrix(order={self.order}, labels={self.labels})"


@dataclass(frozen=True)
class WeightVector:
    """Normalized priority weights plus the method that produced them."""

    weights: tuple[float, ...]
    method: str  # "eigen" | "geometric-mean" | "extent"

    def __post_init__(self):
        total = sum(self.weights)
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"weights must sum to 1, got {total!r}")
        for w in self.weights:
            if w < -1e-12 or w > 1.0 + 1e-12:
                raise ValueError(f"weight out of [0, 1]: {w!r}")

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, i: int) -> float:
        return self.weights[i]


@dataclass(frozen=True)
class ConsistencyReport:
    lambda_max: float
    ci: float
    cr: float
    consistent: bool


@dataclass(frozen=True)
class CellRepair:
    """One repaired cell: what it was, what it became, and why."""

    i: int
    j: int
    before: tuple
    after: tuple
    reason: str
    matrix: str | None = None


def _as_square_array(raw, matrix: str | None) -> np.ndarray:
    rows = list(raw)
    n = len(rows)
    widths = [len(list(r)) for r in rows]
    if n < 2 or any(w != n for w in widths):
        raise NonSquare(n, max(widths, default=0), matrix=matrix)
    return np.array([[float(x) for x in r] for r in rows], dtype=float)


def validate_matrix(
    raw,
    labels: tuple[str, ...] | None = None,
    *,
    reciprocity_tol: float = STRICT_RECIPROCITY_TOL,
    matrix: str | None = None,
) -> ComparisonMatrix:
    """Validate a raw square array of judgments into a ComparisonMatrix.

    Rejections identify the first violated cell (row-major scan): positivity,
    then unit diagonal, then reciprocity of each upper/lower pair.  The
    reciprocity test is ``|a_ij * a_ji - 1| <= tol``, scale-free so that 5
    vs 0.2 and 1/7 vs 7 are treated alike.
    """
    a = _as_square_array(raw, matrix)
    n = a.shape[0]
    for i in range(n):
        for j in range(n):
            if not a[i, j] > 0.0:
                raise NonPositiveEntry(i, j, float(a[i, j]), matrix=matrix)
    for i in range(n):
        if a[i, i] != 1.0:
            raise DiagonalNotOne(i, float(a[i, i]), matrix=matrix)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i, j] * a[j, i] - 1.0) > reciprocity_tol:
                raise ReciprocityViolation(i, j, float(a[i, j]), float(a[j, i]), matrix=matrix)
    return ComparisonMatrix(a, labels or default_labels(n))


def repair_matrix(raw, labels: tuple[str, ...] | None = None, *, matrix: str | None = None) -> ComparisonMatrix:
    """Rebuild a matrix from its strict upper triangle.

    Diagonal is forced to 1 and the lower triangle is overwritten with exact
    reciprocals, so the result always passes validation and the operation is
    idempotent.  Upper-triangle entries must be positive.
    """
    a = _as_square_array(raw, matrix)
    n = a.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if not a[i, j] > 0.0:
                raise NonPositiveEntry(i, j, float(a[i, j]), matrix=matrix)
    out = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            out[i, j] = a[i, j]
            out[j, i] = 1.0 / a[i, j]
    return ComparisonMatrix(out, labels or default_labels(n))


def repair_matrix_logged(
    raw,
    labels: tuple[str, ...] | None = None,
    *,
    reciprocity_tol: float = LENIENT_RECIPROCITY_TOL,
    matrix: str | None = None,
) -> tuple[ComparisonMatrix, list[CellRepair]]:
    """Lenient repair: keep every cell that is sound, fix and log the rest.

    Rounded reciprocals within tolerance stay verbatim (printed data sources
    round to few decimals); genuine violations are overwritten from the upper
    triangle.  Upper-triangle entries must themselves be positive.
    """
    a = _as_square_array(raw, matrix)
    n = a.shape[0]
    repairs: list[CellRepair] = []

    def log(i, j, before, after, reason):
        repairs.append(CellRepair(i, j, (float(before),), (float(after),), reason, matrix))

    for i in range(n):
        for j in range(i + 1, n):
            if not a[i, j] > 0.0:
                raise NonPositiveEntry(i, j, float(a[i, j]), matrix=matrix)
    for i in range(n):
        if a[i, i] != 1.0:
            log(i, i, a[i, i], 1.0, "diagonal forced to 1")
            a[i, i] = 1.0
    for i in range(n):
        for j in range(i + 1, n):
            if not a[j, i] > 0.0 or abs(a[i, j] * a[j, i] - 1.0) > reciprocity_tol:
                fixed = 1.0 / a[i, j]
                log(j, i, a[j, i], fixed, "reciprocity restored from upper triangle")
                a[j, i] = fixed
    return ComparisonMatrix(a, labels or default_labels(n)), repairs


def eigen_weights(m: ComparisonMatrix) -> tuple[WeightVector, float]:
    """Principal-eigenvector weights and the dominant eigenvalue.

    Power iteration with sum-normalization at every step; deterministic
    (uniform start vector).  The eigenvalue is recovered as the average of
    (Aw)_i / w_i over all components.
    """
    a = m.entries
    n = m.order
    w = np.full(n, 1.0 / n)
    for _ in range(POWER_ITERATION_CAP):
        nxt = a @ w
        nxt /= nxt.sum()
        if np.max(np.abs(nxt - w)) < POWER_ITERATION_TOL:
            w = nxt
            break
        w = nxt
    else:
        raise ConvergenceFailure(f"power iteration did not converge in {POWER_ITERATION_CAP} steps")
    lambda_max = float(np.mean((a @ w) / w))
    return WeightVector(tuple(float(x) for x in w), "eigen"), lambda_max


def geometric_mean_weights(m: ComparisonMatrix) -> WeightVector:
    """Row geometric means, normalized to sum 1."""
    a = m.entries
    n = m.order
    r = np.exp(np.log(a).sum(axis=1) / n)
    w = r / r.sum()
    return WeightVector(tuple(float(x) for x in w), "geometric-mean")


def consistency_index(lambda_max: float, n: int) -> float:
    """CI = (lambda_max - n) / (n - 1); zero for the degenerate order 1."""
    if n <= 1:
        return 0.0
    return (lambda_max - n) / (n - 1)


def consistency(m: ComparisonMatrix) -> ConsistencyReport:
    """Consistency diagnostics: lambda_max, CI, and CR = CI / RI(n)."""
    n = m.order
    if n >= len(RANDOM_INDEX):
        raise UnsupportedOrder(f"random index undefined for order {n} (max {len(RANDOM_INDEX) - 1})")
    _, lambda_max = eigen_weights(m)
    ci = consistency_index(lambda_max, n)
    ri = RANDOM_INDEX[n]
    cr = 0.0 if ri == 0.0 else ci / ri
    return ConsistencyReport(lambda_max=lambda_max, ci=ci, cr=cr, consistent=cr <= CR_THRESHOLD)
