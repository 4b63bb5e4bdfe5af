"""Problem-file ingestion, bundled fixtures, result persistence.

Two on-disk problem formats:

* Canonical JSON documents store only the upper triangle of every matrix,
  so reciprocity violations are unrepresentable; the lower triangle is
  reciprocal-filled on load.
* Sectioned CSV stores full matrices verbatim (one ``# matrix:`` block per
  matrix) and exists precisely to carry imperfect source data through the
  validate/repair machinery.

Results serialize deterministically: sorted keys, every numeric a 4-decimal
string, write-then-rename.
"""

from __future__ import annotations

import json
import os
import tempfile
from importlib import resources
from pathlib import Path

from .comparison import (
    CellRepair,
    ComparisonMatrix,
    LENIENT_RECIPROCITY_TOL,
    repair_matrix_logged,
    validate_matrix,
)
from .engine import DecisionProblem, RankedResult
from .errors import (
    BadNumber,
    IoError,
    ParseError,
    RaggedRows,
    UnknownLabel,
)
from .fuzzy import FuzzyMatrix, Tfn, scale_to_tfn, tfn_invert, validate_fuzzy_matrix, repair_fuzzy_matrix

SCHEMA_VERSION = 1

# Linguistic intensity vocabulary (normalized lowercase).
LABEL_VALUES = {
    "equally important": 1,
    "moderately important": 3,
    "moderately important with one over another": 3,
    "strongly important": 5,
    "very strongly important": 7,
    "extremely important": 9,
}

FIXTURE_NAMES = (
    "paper-case-crisp.json",
    "paper-case-fuzzy.json",
    "paper-case-asprinted-crisp.csv",
    "paper-case-asprinted-fuzzy.csv",
)


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture file."""
    if name not in FIXTURE_NAMES:
        raise IoError(f"unknown fixture {name!r}; bundled: {', '.join(FIXTURE_NAMES)}")
    return Path(str(resources.files("ahpkit").joinpath("fixtures", name)))


# ---------------------------------------------------------------------------
# value decoding


def _label_value(label: str) -> int:
    key = " ".join(label.lower().split())
    if key not in LABEL_VALUES:
        raise UnknownLabel(f"unknown linguistic label {label!r}")
    return LABEL_VALUES[key]


def decode_crisp_value(v) -> float:
    if isinstance(v, bool):
        raise ParseError(f"judgment value cannot be a boolean: {v!r}")
    if isinstance(v, (int, float)):
        return float(v)
    if isinstance(v, dict):
        reciprocal = bool(v.get("reciprocal", False))
        if "saaty" in v:
            grade = v["saaty"]
            if not isinstance(grade, int) or not 1 <= grade <= 9:
                raise ParseError(f"saaty grade must be an integer 1..9, got {grade!r}")
            return 1.0 / grade if reciprocal else float(grade)
        if "label" in v:
            grade = _label_value(str(v["label"]))
            return 1.0 / grade if reciprocal else float(grade)
    raise ParseError(f"cannot decode crisp judgment value {v!r}")


def decode_fuzzy_value(v) -> Tfn:
    if isinstance(v, (list, tuple)) and len(v) == 3:
        try:
            return Tfn(*(float(x) for x in v))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad TFN triple {v!r}: {exc}") from None
    if isinstance(v, bool):
        raise ParseError(f"judgment value cannot be a boolean: {v!r}")
    if isinstance(v, (int, float)):
        x = float(v)
        return Tfn(x, x, x)
    if isinstance(v, dict):
        reciprocal = bool(v.get("reciprocal", False))
        if "saaty" in v:
            grade = v["saaty"]
            if not isinstance(grade, int) or not 1 <= grade <= 9:
                raise ParseError(f"saaty grade must be an integer 1..9, got {grade!r}")
            return scale_to_tfn(grade, reciprocal)
        if "label" in v:
            return scale_to_tfn(_label_value(str(v["label"])), reciprocal)
    raise ParseError(f"cannot decode fuzzy judgment value {v!r}")


# ---------------------------------------------------------------------------
# canonical JSON documents


def _matrix_from_cells(cells, n: int, mode: str, selector: str):
    seen = set()
    if mode == "crisp":
        full = [[1.0] * n for _ in range(n)]
    else:
        one = Tfn(1.0, 1.0, 1.0)
        full = [[one] * n for _ in range(n)]
    for cell in cells:
        if not isinstance(cell, dict) or "i" not in cell or "j" not in cell or "value" not in cell:
            raise ParseError(f"matrix {selector!r}: cells must be objects with i, j, value")
        i, j = cell["i"], cell["j"]
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < n):
            raise ParseError(f"matrix {selector!r}: cell ({i},{j}) is not an upper-triangle position")
        if (i, j) in seen:
            raise ParseError(f"matrix {selector!r}: duplicate cell ({i},{j})")
        seen.add((i, j))
        if mode == "crisp":
            v = decode_crisp_value(cell["value"])
            full[i][j] = v
            full[j][i] = 1.0 / v
        else:
            t = decode_fuzzy_value(cell["value"])
            full[i][j] = t
            full[j][i] = tfn_invert(t)
    missing = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in seen]
    if missing:
        raise ParseError(f"matrix {selector!r}: missing upper-triangle cells {missing}")
    return full


def _problem_from_json(doc: dict) -> DecisionProblem:
    if not isinstance(doc, dict):
        raise ParseError("problem document must be a JSON object")
    if doc.get("schema") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema version {doc.get('schema')!r} (supported: {SCHEMA_VERSION})")
    mode = doc.get("mode")
    if mode not in ("crisp", "fuzzy"):
        raise ParseError(f"mode must be 'crisp' or 'fuzzy', got {mode!r}")
    criteria = tuple(str(c) for c in doc.get("criteria", []))
    alternatives = tuple(str(a) for a in doc.get("alternatives", []))
    if len(criteria) < 2:
        raise ParseError("at least two criteria are required", field="criteria")
    if len(alternatives) < 2:
        raise ParseError("at least two alternatives are required", field="alternatives")
    if len(set(criteria)) != len(criteria):
        raise ParseError("criteria names must be unique", field="criteria")
    if len(set(alternatives)) != len(alternatives):
        raise ParseError("alternative names must be unique", field="alternatives")

    def build(cells, n, labels, selector):
        full = _matrix_from_cells(cells, n, mode, selector)
        if mode == "crisp":
            return validate_matrix(full, labels, matrix=selector)
        return validate_fuzzy_matrix(full, labels, matrix=selector)

    cm = build(doc.get("criteria_matrix", []), len(criteria), criteria, "criteria")
    am_doc = doc.get("alternative_matrices", {})
    if set(am_doc) != set(criteria):
        raise ParseError(
            "alternative_matrices must have exactly one entry per criterion", field="alternative_matrices"
        )
    mats = tuple(build(am_doc[c], len(alternatives), alternatives, c) for c in criteria)
    return DecisionProblem(
        goal=str(doc.get("goal", "")),
        criteria=criteria,
        alternatives=alternatives,
        criteria_matrix=cm,
        alternative_matrices=mats,
        mode=mode,
    )


# ---------------------------------------------------------------------------
# CSV


def _parse_crisp_field(text: str, row: int, col: int) -> float:
    s = text.strip()
    parts = s.split("/")
    try:
        if len(parts) == 1:
            return float(parts[0])
        if len(parts) == 2:
            return float(parts[0]) / float(parts[1])
    except (ValueError, ZeroDivisionError):
        pass
    raise BadNumber(row, col, text)


def _parse_fuzzy_field(text: str, row: int, col: int) -> tuple[float, float, float]:
    parts = text.strip().split("/")
    if len(parts) != 3:
        raise BadNumber(row, col, text)
    try:
        return tuple(float(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise BadNumber(row, col, text) from None


def import_matrix_csv(text: str, mode: str = "crisp"):
    """Parse one full matrix from CSV text.

    Crisp fields are numbers or "p/q" fractions; fuzzy fields are "l/m/u".
    Returns raw rows (no validation) to hand to validate/repair.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty CSV matrix")
    rows = []
    n = len(lines)
    for r, ln in enumerate(lines):
        fields = ln.split(",")
        if len(fields) != n:
            raise RaggedRows(f"row {r} has {len(fields)} fields, expected {n}", line=r)
        if mode == "crisp":
            rows.append([_parse_crisp_field(f, r, c) for c, f in enumerate(fields)])
        else:
            rows.append([_parse_fuzzy_field(f, r, c) for c, f in enumerate(fields)])
    return rows


def _problem_from_csv(text: str, strict: bool) -> DecisionProblem:
    """Sectioned CSV: '# key: value' directives and '# matrix:' blocks."""
    mode = "crisp"
    goal = ""
    criteria: list[str] = []
    alternatives: list[str] = []
    blocks: list[tuple[str, list[str]]] = []
    current: list[str] | None = None
    for lineno, ln in enumerate(text.splitlines(), start=1):
        s = ln.strip()
        if not s:
            continue
        if s.startswith("#"):
            body = s.lstrip("#").strip()
            key, _, value = body.partition(":")
            key = key.strip().lower()
            value = value.strip()
            if key == "mode":
                if value not in ("crisp", "fuzzy"):
                    raise ParseError(f"mode must be crisp or fuzzy, got {value!r}", line=lineno)
                mode = value
            elif key == "goal":
                goal = value
            elif key == "criteria":
                criteria = [v.strip() for v in value.split(";") if v.strip()]
            elif key == "alternatives":
                alternatives = [v.strip() for v in value.split(";") if v.strip()]
            elif key == "matrix":
                current = []
                blocks.append((value, current))
            else:
                raise ParseError(f"unknown directive {key!r}", line=lineno)
        else:
            if current is None:
                raise ParseError("matrix rows before any '# matrix:' directive", line=lineno)
            current.append(ln)
    if len(criteria) < 2:
        raise ParseError("at least two criteria are required", field="criteria")
    if len(alternatives) < 2:
        raise ParseError("at least two alternatives are required", field="alternatives")
    by_name = {name: lines for name, lines in blocks}
    if "criteria" not in by_name:
        raise ParseError("missing '# matrix: criteria' block")
    missing = [c for c in criteria if c not in by_name]
    if missing:
        raise ParseError(f"missing matrix blocks for criteria: {missing}")

    repairs: list[CellRepair] = []

    def build(name: str, labels):
        raw = import_matrix_csv("\n".join(by_name[name]), mode)
        if mode == "crisp":
            if strict:
                return validate_matrix(raw, labels, matrix=name)
            m, log = repair_matrix_logged(raw, labels, matrix=name)
            repairs.extend(log)
            return m
        if strict:
            return validate_fuzzy_matrix(raw, labels, matrix=name)
        m, log = repair_fuzzy_matrix(raw, labels, matrix=name)
        repairs.extend(log)
        return m

    cm = build("criteria", tuple(criteria))
    mats = tuple(build(c, tuple(alternatives)) for c in criteria)
    return DecisionProblem(
        goal=goal,
        criteria=tuple(criteria),
        alternatives=tuple(alternatives),
        criteria_matrix=cm,
        alternative_matrices=mats,
        mode=mode,
        repair_log=tuple(repairs),
    )


# ---------------------------------------------------------------------------
# entry points


def load_problem(source: str | Path, *, strict: bool = False) -> DecisionProblem:
    """Load a decision problem from a path or from raw document text.

    JSON documents are canonical (upper-triangle only) and need no repair;
    sectioned CSV carries full matrices and goes through strict validation
    or lenient logged repair depending on ``strict``.
    """
    text, label = _read_source(source)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {label}: {exc}") from None
        return _problem_from_json(doc)
    return _problem_from_csv(text, strict)


def _read_source(source: str | Path) -> tuple[str, str]:
    if isinstance(source, Path):
        return _read_file(source), str(source)
    s = str(source)
    looks_like_text = "\n" in s or s.lstrip().startswith(("{", "#"))
    if not looks_like_text and os.path.exists(s):
        return _read_file(Path(s)), s
    if looks_like_text:
        return s, "<text>"
    raise IoError(f"no such problem file: {s}")


def _read_file(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from None


def problem_to_document(p: DecisionProblem) -> dict:
    """Canonical snapshot: upper-triangle cells at full precision.

    Problems carrying verbatim (merely tolerated) lower-triangle data are
    canonicalized by this export; the upper triangle wins.
    """

    def cells_of(m) -> list[dict]:
        out = []
        for i in range(m.order):
            for j in range(i + 1, m.order):
                if p.mode == "crisp":
                    value = float(m.entries[i][j]) if isinstance(m, FuzzyMatrix) else float(m.entries[i, j])
                else:
                    t = m.entries[i][j]
                    value = [t.l, t.m, t.u]
                out.append({"i": i, "j": j, "value": value})
        return out

    return {
        "schema": SCHEMA_VERSION,
        "goal": p.goal,
        "mode": p.mode,
        "criteria": list(p.criteria),
        "alternatives": list(p.alternatives),
        "criteria_matrix": cells_of(p.criteria_matrix),
        "alternative_matrices": {
            name: cells_of(m) for name, m in zip(p.criteria, p.alternative_matrices)
        },
    }


def save_problem(p: DecisionProblem, path: str | Path) -> None:
    """Write a canonical problem document (write-then-rename)."""
    _atomic_write(Path(path), json.dumps(problem_to_document(p), sort_keys=True, indent=2) + "\n")


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def result_to_document(r: RankedResult) -> dict:
    """Report-shaped dict with every numeric rendered at 4 decimals."""
    doc = {
        "criteria": list(r.criteria),
        "alternatives": list(r.alternatives),
        "method": r.method,
        "criteria_weights": [_fmt(w) for w in r.criteria_weights.weights],
        "local_weights": {c: [_fmt(w) for w in lw.weights] for c, lw in zip(r.criteria, r.local_weights)},
        "global_scores": [_fmt(s) for s in r.global_scores],
        "rank_order": list(r.rank_order),
        "ranking": list(r.ranking()),
        "diagnostics": None,
    }
    if r.diagnostics is not None:
        doc["diagnostics"] = {
            name: {
                "lambda_max": _fmt(rep.lambda_max),
                "ci": _fmt(rep.ci),
                "cr": _fmt(rep.cr),
                "consistent": rep.consistent,
            }
            for name, rep in r.diagnostics.items()
        }
    return doc


def save_result(r: RankedResult, path: str | Path) -> None:
    """Serialize a result deterministically; write-then-rename, never partial."""
    payload = json.dumps(result_to_document(r), sort_keys=True, indent=2) + "\n"
    _atomic_write(Path(path), payload)


def _atomic_write(path: Path, payload: str) -> None:
    try:
        fd, tmp = tempfile.mkstemp(dir=str(path.parent) or ".", prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from None


def load_result(path: str | Path) -> dict:
    """Read back a saved result document."""
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid result file {path}: {exc}") from None
