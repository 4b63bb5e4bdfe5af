"""Exception hierarchy shared by every layer (library, store, service, CLI).

Each error carries a stable ``code`` string so the HTTP service and the CLI
can surface machine-readable failures without string matching.
"""

from __future__ import annotations


class AhpError(Exception):
    """Base class for all package errors."""

    code = "error"

    def __init__(self, message: str, *, matrix: str | None = None):
        super().__init__(message)
        # selector of the judgment matrix this error refers to, when known
        self.matrix = matrix

    def detail(self) -> dict:
        d: dict = {"message": str(self)}
        if self.matrix is not None:
            d["matrix"] = self.matrix
        return d


class MatrixValidationError(AhpError):
    """A judgment matrix violated a structural invariant."""

    code = "validation_error"


class NonSquare(MatrixValidationError):
    code = "non_square"

    def __init__(self, rows: int, cols: int, *, matrix: str | None = None):
        super().__init__(f"matrix is not square: {rows} rows, {cols} columns in the widest row", matrix=matrix)
        self.rows = rows
        self.cols = cols


class NonPositiveEntry(MatrixValidationError):
    code = "non_positive_entry"

    def __init__(self, i: int, j: int, value: float, *, matrix: str | None = None):
        super().__init__(f"entry ({i},{j}) must be strictly positive, got {value!r}", matrix=matrix)
        self.i = i
        self.j = j
        self.value = value


class DiagonalNotOne(MatrixValidationError):
    code = "diagonal_not_one"

    def __init__(self, i: int, value, *, matrix: str | None = None):
        super().__init__(f"diagonal entry ({i},{i}) must be 1, got {value!r}", matrix=matrix)
        self.i = i
        self.value = value


class ReciprocityViolation(MatrixValidationError):
    code = "reciprocity_violation"

    def __init__(self, i: int, j: int, value_ij, value_ji, *, matrix: str | None = None):
        super().__init__(
            f"entries ({i},{j})={value_ij!r} and ({j},{i})={value_ji!r} are not reciprocal",
            matrix=matrix,
        )
        self.i = i
        self.j = j
        self.value_ij = value_ij
        self.value_ji = value_ji


class MalformedTfn(MatrixValidationError):
    """A fuzzy cell is not a valid triangular number (unordered or non-positive)."""

    code = "malformed_tfn"

    def __init__(self, i: int, j: int, triple, *, matrix: str | None = None):
        super().__init__(f"cell ({i},{j}) is not a valid triangular number: {triple!r}", matrix=matrix)
        self.i = i
        self.j = j
        self.triple = triple


class ConvergenceFailure(AhpError):
    code = "convergence_failure"


class UnsupportedOrder(AhpError):
    code = "unsupported_order"


class NonPositiveOperand(AhpError):
    code = "non_positive_operand"


class OutOfScale(AhpError):
    code = "out_of_scale"


class DegenerateTotal(AhpError):
    code = "degenerate_total"


class DegenerateWeights(AhpError):
    code = "degenerate_weights"


class DimensionMismatch(AhpError):
    code = "dimension_mismatch"


class AlternativeSetMismatch(AhpError):
    code = "alternative_set_mismatch"


class ParseError(AhpError):
    code = "parse_error"

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line})"
        super().__init__(message + loc)
        self.line = line
        self.field = field


class UnknownLabel(ParseError):
    code = "unknown_label"


class RaggedRows(ParseError):
    code = "ragged_rows"


class BadNumber(ParseError):
    code = "bad_number"

    def __init__(self, row: int, col: int, text: str):
        super().__init__(f"cannot parse {text!r} at row {row}, column {col}")
        self.row = row
        self.col = col
        self.text = text


class IoError(AhpError):
    code = "io_error"


class BadRequest(AhpError):
    code = "bad_request"


class UnknownSession(AhpError):
    code = "unknown_session"


class CellOutOfRange(AhpError):
    code = "cell_out_of_range"


class LowerTriangleRejected(AhpError):
    code = "lower_triangle_rejected"


class IncompleteJudgments(AhpError):
    code = "incomplete_judgments"

    def __init__(self, missing: list, *, matrix: str | None = None):
        super().__init__(f"{len(missing)} judgment cell(s) still unset", matrix=matrix)
        self.missing = missing

    def detail(self) -> dict:
        d = super().detail()
        d["missing"] = [list(m) for m in self.missing]
        return d
