"""End-to-end solving over a goal / criteria / alternatives hierarchy.

One criteria layer, one alternatives matrix per criterion.  Global scores
are the criteria-weighted sum of local alternative weights; rankings sort
scores descending with ties broken by input position.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .comparison import (
    ComparisonMatrix,
    ConsistencyReport,
    WeightVector,
    consistency,
    eigen_weights,
    geometric_mean_weights,
    repair_matrix,
)
from .errors import (
    AhpError,
    AlternativeSetMismatch,
    BadRequest,
    DimensionMismatch,
)
from .fuzzy import ATTITUDES, CellRepair, FuzzyMatrix, Tfn, defuzzify, tfn_invert
from .extent import extent_weights

CRISP_METHODS = ("eigen", "geometric-mean")


@dataclass(frozen=True)
class DecisionProblem:
    """A complete judgment set: goal, criteria, alternatives, matrices."""

    goal: str
    criteria: tuple[str, ...]
    alternatives: tuple[str, ...]
    criteria_matrix: ComparisonMatrix | FuzzyMatrix
    alternative_matrices: tuple[ComparisonMatrix | FuzzyMatrix, ...]
    mode: str  # "crisp" | "fuzzy"
    repair_log: tuple[CellRepair, ...] = field(default=())

    def __post_init__(self):
        if self.mode not in ("crisp", "fuzzy"):
            raise BadRequest(f"mode must be crisp or fuzzy, got {self.mode!r}")
        want = ComparisonMatrix if self.mode == "crisp" else FuzzyMatrix
        if not isinstance(self.criteria_matrix, want):
            raise BadRequest(f"criteria matrix type does not match mode {self.mode!r}")
        if self.criteria_matrix.order != len(self.criteria):
            raise DimensionMismatch(
                f"criteria matrix order {self.criteria_matrix.order} != {len(self.criteria)} criteria"
            )
        if len(self.alternative_matrices) != len(self.criteria):
            raise DimensionMismatch(
                f"need one alternatives matrix per criterion: got {len(self.alternative_matrices)}"
            )
        for name, m in zip(self.criteria, self.alternative_matrices):
            if not isinstance(m, want):
                raise BadRequest(f"alternatives matrix for {name!r} does not match mode {self.mode!r}")
            if m.order != len(self.alternatives):
                raise DimensionMismatch(
                    f"alternatives matrix for {name!r} has order {m.order}, expected {len(self.alternatives)}"
                )


@dataclass(frozen=True)
class RankedResult:
    """Solved hierarchy: weights at both levels, global scores, ranking."""

    criteria: tuple[str, ...]
    alternatives: tuple[str, ...]
    method: str
    criteria_weights: WeightVector
    local_weights: tuple[WeightVector, ...]
    global_scores: tuple[float, ...]
    rank_order: tuple[int, ...]
    diagnostics: dict[str, ConsistencyReport] | None = None

    def __post_init__(self):
        if abs(sum(self.global_scores) - 1.0) > 1e-9:
            raise ValueError("global scores must sum to 1")
        if sorted(self.rank_order) != list(range(len(self.alternatives))):
            raise ValueError("rank order must be a permutation of alternative indices")

    def ranking(self) -> tuple[str, ...]:
        return tuple(self.alternatives[i] for i in self.rank_order)


def rank_indices(scores) -> tuple[int, ...]:
    """Indices sorted by score descending, ties kept in input order."""
    return tuple(sorted(range(len(scores)), key=lambda i: (-scores[i], i)))


def aggregate_global(criteria_w: WeightVector, locals_: tuple[WeightVector, ...]) -> tuple[float, ...]:
    """Weighted-sum synthesis: score_a = sum_c w_c * local_c[a]."""
    if len(locals_) != len(criteria_w):
        raise DimensionMismatch(f"{len(locals_)} local vectors for {len(criteria_w)} criteria weights")
    sizes = {len(lw) for lw in locals_}
    if len(sizes) != 1:
        raise DimensionMismatch(f"local weight vectors disagree on alternative count: {sorted(sizes)}")
    n_alt = sizes.pop()
    scores = np.zeros(n_alt)
    for c in range(len(criteria_w)):
        scores += criteria_w[c] * np.asarray(locals_[c].weights)
    return tuple(float(s) for s in scores)


def _ranked(p: DecisionProblem, method: str, cw: WeightVector, locals_, diagnostics=None) -> RankedResult:
    scores = aggregate_global(cw, tuple(locals_))
    return RankedResult(
        criteria=p.criteria,
        alternatives=p.alternatives,
        method=method,
        criteria_weights=cw,
        local_weights=tuple(locals_),
        global_scores=scores,
        rank_order=rank_indices(scores),
        diagnostics=diagnostics,
    )


def _tagged(exc: AhpError, tag: str) -> AhpError:
    if exc.matrix is None:
        exc.matrix = tag
    return exc


def solve_crisp(p: DecisionProblem, method: str = "geometric-mean") -> RankedResult:
    """Classical solve: weight extraction per matrix, weighted-sum synthesis.

    Consistency diagnostics are attached for every matrix, keyed "criteria"
    and by criterion name.
    """
    if p.mode != "crisp":
        raise BadRequest("solve_crisp requires a crisp problem")
    if method not in CRISP_METHODS:
        raise BadRequest(f"method must be one of {CRISP_METHODS}, got {method!r}")

    def weights_of(m: ComparisonMatrix, tag: str) -> WeightVector:
        try:
            if method == "eigen":
                return eigen_weights(m)[0]
            return geometric_mean_weights(m)
        except AhpError as exc:
            raise _tagged(exc, tag)

    diagnostics: dict[str, ConsistencyReport] = {}
    try:
        diagnostics["criteria"] = consistency(p.criteria_matrix)
    except AhpError as exc:
        raise _tagged(exc, "criteria")
    cw = weights_of(p.criteria_matrix, "criteria")
    locals_ = []
    for name, m in zip(p.criteria, p.alternative_matrices):
        try:
            diagnostics[name] = consistency(m)
        except AhpError as exc:
            raise _tagged(exc, name)
        locals_.append(weights_of(m, name))
    return _ranked(p, method, cw, locals_, diagnostics)


def solve_fuzzy(p: DecisionProblem) -> RankedResult:
    """Fuzzy solve via extent analysis; no consistency diagnostics exist here."""
    if p.mode != "fuzzy":
        raise BadRequest("solve_fuzzy requires a fuzzy problem")
    try:
        cw = extent_weights(p.criteria_matrix)
    except AhpError as exc:
        raise _tagged(exc, "criteria")
    locals_ = []
    for name, m in zip(p.criteria, p.alternative_matrices):
        try:
            locals_.append(extent_weights(m))
        except AhpError as exc:
            raise _tagged(exc, name)
    return _ranked(p, "extent", cw, locals_, None)


def _fuzzify_cell(v: float, where: str) -> Tfn:
    from .fuzzy import scale_to_tfn  # local import keeps module load order simple

    if v >= 1.0:
        grade = round(v)
        if abs(v - grade) <= 1e-6 and 1 <= grade <= 9:
            return scale_to_tfn(int(grade))
    else:
        grade = round(1.0 / v)
        if abs(1.0 / v - grade) <= 1e-6 and 1 <= grade <= 9:
            return scale_to_tfn(int(grade), reciprocal=True)
    raise BadRequest(f"{where}: judgment {v!r} is not on the 1..9 scale, cannot fuzzify")


def fuzzify_problem(p: DecisionProblem) -> DecisionProblem:
    """Spread every crisp judgment into its fuzzy range.

    Only Saaty-valued entries (integers 1..9 or their reciprocals) can be
    spread; anything else is rejected.  Upper triangle is mapped, lower
    rebuilt by inversion.
    """
    if p.mode != "crisp":
        raise BadRequest("fuzzify_problem requires a crisp problem")

    def convert(m: ComparisonMatrix, tag: str) -> FuzzyMatrix:
        n = m.order
        one = Tfn(1.0, 1.0, 1.0)
        cells = [[one] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                t = _fuzzify_cell(float(m.entries[i, j]), f"{tag} cell ({i},{j})")
                cells[i][j] = t
                cells[j][i] = tfn_invert(t)
        return FuzzyMatrix(cells, m.labels)

    return DecisionProblem(
        goal=p.goal,
        criteria=p.criteria,
        alternatives=p.alternatives,
        criteria_matrix=convert(p.criteria_matrix, "criteria"),
        alternative_matrices=tuple(
            convert(m, name) for name, m in zip(p.criteria, p.alternative_matrices)
        ),
        mode="fuzzy",
        repair_log=p.repair_log,
    )


def defuzzify_matrix(fm: FuzzyMatrix, attitude: str) -> ComparisonMatrix:
    """Collapse every TFN cell by attitude, then re-reciprocalize.

    The upper triangle is authoritative: defuzzified lower cells are
    discarded and rebuilt as exact reciprocals, so the result is always a
    valid crisp matrix.
    """
    n = fm.order
    raw = [[defuzzify(fm.entries[i][j], attitude) for j in range(n)] for i in range(n)]
    return repair_matrix(raw, fm.labels)


def what_if_attitude(p: DecisionProblem, attitude: str) -> RankedResult:
    """Crisp re-solve of a fuzzy problem under one decision attitude."""
    if p.mode != "fuzzy":
        raise BadRequest("what-if attitudes apply to fuzzy problems only")
    if attitude not in ATTITUDES:
        raise BadRequest(f"attitude must be one of {ATTITUDES}, got {attitude!r}")
    crisp = DecisionProblem(
        goal=p.goal,
        criteria=p.criteria,
        alternatives=p.alternatives,
        criteria_matrix=defuzzify_matrix(p.criteria_matrix, attitude),
        alternative_matrices=tuple(defuzzify_matrix(m, attitude) for m in p.alternative_matrices),
        mode="crisp",
        repair_log=p.repair_log,
    )
    result = solve_crisp(crisp, "geometric-mean")
    return replace(result, method=f"attitude:{attitude}")


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side view of two solves over the same alternatives."""

    alternatives: tuple[str, ...]
    method_a: str
    method_b: str
    scores_a: tuple[float, ...]
    scores_b: tuple[float, ...]
    rank_a: tuple[int, ...]
    rank_b: tuple[int, ...]
    flips: tuple[tuple[str, str], ...]
    top_choice_agrees: bool


def _pair_flips(alternatives, scores_a, scores_b) -> tuple[tuple[str, str], ...]:
    n = len(alternatives)
    rank_pos_a = _positions(rank_indices(scores_a))
    rank_pos_b = _positions(rank_indices(scores_b))
    flips = []
    for i in range(n):
        for j in range(i + 1, n):
            if (rank_pos_a[i] - rank_pos_a[j]) * (rank_pos_b[i] - rank_pos_b[j]) < 0:
                flips.append((alternatives[i], alternatives[j]))
    return tuple(flips)


def _positions(order: tuple[int, ...]) -> list[int]:
    pos = [0] * len(order)
    for rank, idx in enumerate(order):
        pos[idx] = rank
    return pos


def compare_rankings(r1: RankedResult, r2: RankedResult) -> ComparisonReport:
    """Diff two results: scores, orders, pairwise flips, top-choice agreement."""
    if r1.alternatives != r2.alternatives:
        raise AlternativeSetMismatch(
            f"alternative sets differ: {r1.alternatives} vs {r2.alternatives}"
        )
    flips = _pair_flips(r1.alternatives, r1.global_scores, r2.global_scores)
    return ComparisonReport(
        alternatives=r1.alternatives,
        method_a=r1.method,
        method_b=r2.method,
        scores_a=r1.global_scores,
        scores_b=r2.global_scores,
        rank_a=r1.rank_order,
        rank_b=r2.rank_order,
        flips=flips,
        top_choice_agrees=r1.rank_order[0] == r2.rank_order[0],
    )


@dataclass(frozen=True)
class NewAlternative:
    """A candidate to append: its judgment against each existing alternative,
    per criterion (value = how strongly the newcomer dominates the incumbent)."""

    name: str
    judgments: dict[str, tuple]  # criterion name -> one value per existing alternative


@dataclass(frozen=True)
class ProbeReport:
    baseline: RankedResult
    extended: RankedResult | None
    flips: tuple[tuple[str, str], ...]
    order_preserved: bool


def _extend_crisp(m: ComparisonMatrix, row, name: str) -> ComparisonMatrix:
    n = m.order
    out = np.ones((n + 1, n + 1))
    out[:n, :n] = m.entries
    for k, v in enumerate(row):
        v = float(v)
        out[n, k] = v
        out[k, n] = 1.0 / v
    return repair_matrix(out, tuple(m.labels) + (name,))


def _extend_fuzzy(m: FuzzyMatrix, row, name: str) -> FuzzyMatrix:
    n = m.order
    one = Tfn(1.0, 1.0, 1.0)
    cells = [list(r) + [one] for r in m.entries]
    cells.append([one] * (n + 1))
    for k, v in enumerate(row):
        t = v if isinstance(v, Tfn) else Tfn(*(float(x) for x in v))
        cells[n][k] = t
        cells[k][n] = tfn_invert(t)
    return FuzzyMatrix(cells, tuple(m.labels) + (name,))


def rank_reversal_probe(p: DecisionProblem, new_alternative: NewAlternative | None = None) -> ProbeReport:
    """Check whether appending an alternative disturbs the incumbents' order.

    Solves the problem before and after the extension (crisp problems use the
    geometric-mean method, fuzzy ones extent analysis) and reports every
    incumbent pair whose relative order changed.
    """
    solve = (lambda q: solve_crisp(q, "geometric-mean")) if p.mode == "crisp" else solve_fuzzy
    baseline = solve(p)
    if new_alternative is None:
        return ProbeReport(baseline=baseline, extended=None, flips=(), order_preserved=True)

    missing = [c for c in p.criteria if c not in new_alternative.judgments]
    if missing:
        raise BadRequest(f"new alternative lacks judgments for criteria: {missing}")
    extended_mats = []
    for name, m in zip(p.criteria, p.alternative_matrices):
        row = new_alternative.judgments[name]
        if len(row) != len(p.alternatives):
            raise DimensionMismatch(
                f"judgment column for {name!r} has {len(row)} values, expected {len(p.alternatives)}"
            )
        extended_mats.append(
            _extend_crisp(m, row, new_alternative.name)
            if p.mode == "crisp"
            else _extend_fuzzy(m, row, new_alternative.name)
        )
    extended_problem = DecisionProblem(
        goal=p.goal,
        criteria=p.criteria,
        alternatives=tuple(p.alternatives) + (new_alternative.name,),
        criteria_matrix=p.criteria_matrix,
        alternative_matrices=tuple(extended_mats),
        mode=p.mode,
    )
    extended = solve(extended_problem)
    n = len(p.alternatives)
    flips = _pair_flips(
        p.alternatives,
        baseline.global_scores,
        extended.global_scores[:n],
    )
    return ProbeReport(
        baseline=baseline,
        extended=extended,
        flips=flips,
        order_preserved=not flips,
    )
