"""Triangular fuzzy numbers, their arithmetic, and fuzzy judgment matrices.

A triangular fuzzy number (l, m, u) models an uncertain judgment ratio:
membership rises linearly from l to the most promising value m, then falls
to u.  Addition, multiplication and inversion use the standard component-wise
approximations, which is exactly the arithmetic the extent-analysis pipeline
needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .comparison import CellRepair
from .errors import (
    DiagonalNotOne,
    MalformedTfn,
    NonPositiveOperand,
    NonSquare,
    OutOfScale,
    ParseError,
    ReciprocityViolation,
)

ATTITUDES = ("pessimistic", "moderate", "optimistic")

FUZZY_RECIPROCITY_TOL = 0.05  # printed tables round to 1-3 decimals


@dataclass(frozen=True)
class Tfn:
    """Triangular fuzzy number with lower limit l, peak m, upper limit u."""

    l: float
    m: float
    u: float

    def __post_init__(self):
        if not (self.l <= self.m <= self.u):
            raise ValueError(f"TFN components must satisfy l <= m <= u, got {(self.l, self.m, self.u)}")

    def is_positive(self) -> bool:
        return self.l > 0.0

    def render(self, decimals: int = 4) -> str:
        return "/".join(f"{x:.{decimals}f}" for x in (self.l, self.m, self.u))

    def __iter__(self):
        return iter((self.l, self.m, self.u))


def parse_tfn(text: str) -> Tfn:
    """Parse "l/m/u" or "[l, m, u]" into a Tfn."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        parts = s[1:-1].split(",")
    else:
        parts = s.split("/")
    if len(parts) != 3:
        raise ParseError(f"expected three TFN components in {text!r}")
    try:
        l, m, u = (float(p.strip()) for p in parts)
    except ValueError:
        raise ParseError(f"non-numeric TFN component in {text!r}") from None
    try:
        return Tfn(l, m, u)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def tfn_add(a: Tfn, b: Tfn) -> Tfn:
    return Tfn(a.l + b.l, a.m + b.m, a.u + b.u)


def tfn_mul(a: Tfn, b: Tfn) -> Tfn:
    if not (a.is_positive() and b.is_positive()):
        raise NonPositiveOperand("TFN multiplication requires strictly positive operands")
    return Tfn(a.l * b.l, a.m * b.m, a.u * b.u)


def tfn_invert(a: Tfn) -> Tfn:
    if not a.is_positive():
        raise NonPositiveOperand("cannot invert a TFN with l <= 0")
    return Tfn(1.0 / a.u, 1.0 / a.m, 1.0 / a.l)


def membership_at(a: Tfn, x: float) -> float:
    """Piecewise-linear membership of x in a.

    Degenerate ramps (l == m or m == u) are treated as steps that attain 1
    at m, so the peak value is always reachable.
    """
    if x < a.l or x > a.u:
        return 0.0
    if x == a.m:
        return 1.0
    if x < a.m:
        return (x - a.l) / (a.m - a.l) if a.m > a.l else 0.0
    return (a.u - x) / (a.u - a.m) if a.u > a.m else 0.0


def scale_to_tfn(saaty: int, reciprocal: bool = False) -> Tfn:
    """Map a 1..9 judgment intensity to its fuzzy range.

    1 stays crisp (1,1,1); every other grade k spreads to (k-2, k, k+2)
    clamped into [1, 9].  reciprocal=True returns the inverted number, for
    "j dominates i" judgments.
    """
    if not isinstance(saaty, int) or isinstance(saaty, bool) or not 1 <= saaty <= 9:
        raise OutOfScale(f"judgment intensity must be an integer in 1..9, got {saaty!r}")
    if saaty == 1:
        t = Tfn(1.0, 1.0, 1.0)
    else:
        t = Tfn(float(max(saaty - 2, 1)), float(saaty), float(min(saaty + 2, 9)))
    return tfn_invert(t) if reciprocal else t


def defuzzify(a: Tfn, attitude: str) -> float:
    """Collapse a TFN to one representative value by decision attitude."""
    if attitude == "pessimistic":
        return a.l
    if attitude == "moderate":
        return a.m
    if attitude == "optimistic":
        return a.u
    raise ValueError(f"attitude must be one of {ATTITUDES}, got {attitude!r}")


def _as_tfn(cell) -> Tfn:
    if isinstance(cell, Tfn):
        return cell
    l, m, u = cell
    return Tfn(float(l), float(m), float(u))


class FuzzyMatrix:
    """Square matrix of TFN judgments with fuzzy-reciprocal structure."""

    __slots__ = ("entries", "labels")

    def __init__(self, entries, labels: tuple[str, ...]):
        self.entries = tuple(tuple(_as_tfn(c) for c in row) for row in entries)
        self.labels = tuple(labels)

    @property
    def order(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, FuzzyMatrix) and self.labels == other.labels and self.entries == other.entries

    def __repr__(self) -> str:
        return f"FuzzyMatrix(order={self.order}, labels={self.labels})"


def _fuzzy_labels(n: int, labels) -> tuple[str, ...]:
    return tuple(labels) if labels else tuple(f"E{i + 1}" for i in range(n))


def _reciprocal_ok(a: Tfn, b: Tfn, tol: float) -> bool:
    # b should be invert(a): l_b*u_a ~ 1, m_b*m_a ~ 1, u_b*l_a ~ 1
    return (
        abs(b.l * a.u - 1.0) <= tol
        and abs(b.m * a.m - 1.0) <= tol
        and abs(b.u * a.l - 1.0) <= tol
    )


def _check_square(raw, matrix: str | None, min_order: int = 1):
    rows = [list(r) for r in raw]
    n = len(rows)
    widths = [len(r) for r in rows]
    if n < min_order or any(w != n for w in widths):
        raise NonSquare(n, max(widths, default=0), matrix=matrix)
    return rows, n


def validate_fuzzy_matrix(
    raw,
    labels: tuple[str, ...] | None = None,
    *,
    reciprocity_tol: float = FUZZY_RECIPROCITY_TOL,
    matrix: str | None = None,
) -> FuzzyMatrix:
    """Validate raw TFN triples into a FuzzyMatrix.

    Cells must be positive valid TFNs, the diagonal must be (1,1,1), and
    every lower cell must be the component-wise inverse of its upper partner
    within the rounding tolerance the printed data sources need.
    """
    rows, n = _check_square(raw, matrix)
    cells: list[list[Tfn]] = []
    for i in range(n):
        row = []
        for j in range(n):
            c = rows[i][j]
            try:
                t = _as_tfn(c)
            except (ValueError, TypeError):
                raise MalformedTfn(i, j, tuple(c) if not isinstance(c, Tfn) else c, matrix=matrix) from None
            if not t.is_positive():
                raise MalformedTfn(i, j, (t.l, t.m, t.u), matrix=matrix)
            row.append(t)
        cells.append(row)
    for i in range(n):
        d = cells[i][i]
        if not (abs(d.l - 1.0) <= 1e-9 and abs(d.m - 1.0) <= 1e-9 and abs(d.u - 1.0) <= 1e-9):
            raise DiagonalNotOne(i, (d.l, d.m, d.u), matrix=matrix)
    for i in range(n):
        for j in range(i + 1, n):
            if not _reciprocal_ok(cells[i][j], cells[j][i], reciprocity_tol):
                raise ReciprocityViolation(
                    i, j, tuple(cells[i][j]), tuple(cells[j][i]), matrix=matrix
                )
    return FuzzyMatrix(cells, _fuzzy_labels(n, labels))


def _try_tfn(c) -> Tfn | None:
    try:
        t = _as_tfn(c)
    except (ValueError, TypeError):
        return None
    return t if t.is_positive() else None


def repair_fuzzy_matrix(
    raw,
    labels: tuple[str, ...] | None = None,
    *,
    reciprocity_tol: float = FUZZY_RECIPROCITY_TOL,
    matrix: str | None = None,
) -> tuple[FuzzyMatrix, list[CellRepair]]:
    """Fix a raw fuzzy matrix cell by cell, keeping everything that is sound.

    Printed tables carry rounded reciprocals, so cells within tolerance are
    kept verbatim.  Malformed cells are replaced by the inverse of their
    transposed partner (upper triangle preferred); if both sides of a pair
    are broken the components are re-sorted as a last resort.  Every change
    is logged.
    """
    rows, n = _check_square(raw, matrix)
    repairs: list[CellRepair] = []

    def log(i, j, before, after: Tfn, reason):
        repairs.append(CellRepair(i, j, tuple(before), (after.l, after.m, after.u), reason, matrix))

    cells: list[list[Tfn | None]] = [[_try_tfn(rows[i][j]) for j in range(n)] for i in range(n)]
    one = Tfn(1.0, 1.0, 1.0)
    for i in range(n):
        d = cells[i][i]
        if d is None or not (abs(d.l - 1.0) <= 1e-9 and abs(d.m - 1.0) <= 1e-9 and abs(d.u - 1.0) <= 1e-9):
            log(i, i, rows[i][i] if d is None else tuple(d), one, "diagonal forced to (1,1,1)")
            cells[i][i] = one
    for i in range(n):
        for j in range(i + 1, n):
            up, lo = cells[i][j], cells[j][i]
            if up is None and lo is not None:
                up = tfn_invert(lo)
                log(i, j, rows[i][j], up, "malformed cell replaced by reciprocal of its transpose")
            elif lo is None and up is not None:
                lo = tfn_invert(up)
                log(j, i, rows[j][i], lo, "malformed cell replaced by reciprocal of its transpose")
            elif up is None and lo is None:
                up = _resort(rows[i][j], i, j, matrix)
                lo = _resort(rows[j][i], j, i, matrix)
                log(i, j, rows[i][j], up, "components re-sorted")
                log(j, i, rows[j][i], lo, "components re-sorted")
            if not _reciprocal_ok(up, lo, reciprocity_tol):
                fixed = tfn_invert(up)
                log(j, i, tuple(lo), fixed, "reciprocity restored from upper triangle")
                lo = fixed
            cells[i][j], cells[j][i] = up, lo
    return FuzzyMatrix(cells, _fuzzy_labels(n, labels)), repairs


def _resort(cell, i: int, j: int, matrix: str | None) -> Tfn:
    try:
        vals = sorted(float(x) for x in cell)
    except (TypeError, ValueError):
        raise MalformedTfn(i, j, cell, matrix=matrix) from None
    if len(vals) != 3 or vals[0] <= 0.0:
        raise MalformedTfn(i, j, cell, matrix=matrix)
    return Tfn(*vals)
