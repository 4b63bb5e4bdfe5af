"""Bundled demo case: choosing a software-effort-estimation model.

Four criteria (reliability, mean magnitude of relative error, prediction
level, uncertainty) score three model families (expert judgment, COCOMO,
fuzzy neural network).  The judgment tables ship exactly as printed in the
source study, bugs included: one crisp alternatives matrix is non-reciprocal
and one fuzzy cell has unordered components, which is what the lenient
repair path exists for.
"""

from __future__ import annotations

from .comparison import CellRepair, LENIENT_RECIPROCITY_TOL, repair_matrix_logged, validate_matrix
from .engine import DecisionProblem
from .fuzzy import repair_fuzzy_matrix

GOAL = "Select the best software effort estimation model"

CRITERIA = (
    "C1 Reliability",
    "C2 MMRE",
    "C3 Pred",
    "C4 Uncertainty",
)

ALTERNATIVES = (
    "A1 Expert Judgment",
    "A2 COCOMO",
    "A3 Fuzzy Neural Network",
)

# Criteria judgments, as printed.
CRISP_CRITERIA = [
    [1, 1 / 5, 1 / 3, 1],
    [5, 1, 1, 7],
    [3, 1, 1, 7],
    [1, 1 / 7, 1 / 7, 1],
]

# Alternative judgments per criterion, as printed.  The last matrix is
# non-reciprocal in its source: (A3,A1) should be 1/5 and (A3,A2) should be 7.
CRISP_ALTERNATIVES = {
    "C1 Reliability": [
        [1, 1 / 5, 1 / 5],
        [5, 1, 3],
        [5, 1 / 3, 1],
    ],
    "C2 MMRE": [
        [1, 1, 1],
        [1, 1, 1 / 3],
        [1, 3, 1],
    ],
    "C3 Pred": [
        [1, 1, 1],
        [1, 1, 1 / 3],
        [1, 3, 1],
    ],
    "C4 Uncertainty": [
        [1, 5, 5],
        [1 / 5, 1, 1 / 7],
        [1 / 3, 1 / 7, 1],
    ],
}

_ONE = (1.0, 1.0, 1.0)

# Fuzzy criteria judgments, as printed (rounded reciprocals kept verbatim —
# the row sums of this exact table are load-bearing downstream).
FUZZY_CRITERIA = [
    [_ONE, (0.14, 0.2, 0.33), (0.2, 0.33, 1.0), _ONE],
    [(3, 5, 7), _ONE, _ONE, (5, 7, 9)],
    [(1, 3, 5), _ONE, _ONE, (5, 7, 9)],
    [_ONE, (0.11, 0.143, 0.2), (0.11, 0.143, 0.2), _ONE],
]

# Fuzzy alternative judgments per criterion, as printed.  The last matrix
# carries an unordered cell (A3,A2) = (0.11, 0.2, 0.14).
FUZZY_ALTERNATIVES = {
    "C1 Reliability": [
        [_ONE, (0.14, 0.2, 0.33), (0.14, 0.2, 0.33)],
        [(3, 5, 7), _ONE, (1, 3, 5)],
        [(3, 5, 7), (0.2, 0.33, 1.0), _ONE],
    ],
    "C2 MMRE": [
        [_ONE, _ONE, _ONE],
        [_ONE, _ONE, (0.2, 0.33, 1.0)],
        [_ONE, (1, 3, 5), _ONE],
    ],
    "C3 Pred": [
        [_ONE, _ONE, _ONE],
        [_ONE, _ONE, (0.2, 0.33, 1.0)],
        [_ONE, (1, 3, 5), _ONE],
    ],
    "C4 Uncertainty": [
        [_ONE, (3, 5, 7), (3, 5, 7)],
        [(0.14, 0.2, 0.32), _ONE, (5, 7, 9)],
        [(0.14, 0.2, 0.33), (0.11, 0.2, 0.14), _ONE],
    ],
}

# Published reference numbers, shown in comparisons and docs.  These are
# display-only annotations: the fuzzy column rests on source-table arithmetic
# that the extent-analysis equations do not reproduce.
PUBLISHED_CLASSICAL_SCORES = (0.320006, 0.243598, 0.436396)
PUBLISHED_FUZZY_SCORES = (0.2918, 0.3580, 0.3434)


def crisp_problem() -> DecisionProblem:
    """The crisp demo problem with the broken matrix repaired (and logged)."""
    repairs: list[CellRepair] = []
    cm, log = repair_matrix_logged(CRISP_CRITERIA, CRITERIA, matrix="criteria")
    repairs.extend(log)
    mats = []
    for name in CRITERIA:
        m, log = repair_matrix_logged(CRISP_ALTERNATIVES[name], ALTERNATIVES, matrix=name)
        repairs.extend(log)
        mats.append(m)
    return DecisionProblem(
        goal=GOAL,
        criteria=CRITERIA,
        alternatives=ALTERNATIVES,
        criteria_matrix=cm,
        alternative_matrices=tuple(mats),
        mode="crisp",
        repair_log=tuple(repairs),
    )


def fuzzy_problem() -> DecisionProblem:
    """The fuzzy demo problem with the malformed cell repaired (and logged).

    Cells that are merely rounded reciprocals are kept verbatim, so sums and
    extents computed from this problem match the printed source tables.
    """
    repairs: list[CellRepair] = []
    cm, log = repair_fuzzy_matrix(FUZZY_CRITERIA, CRITERIA, matrix="criteria")
    repairs.extend(log)
    mats = []
    for name in CRITERIA:
        m, log = repair_fuzzy_matrix(FUZZY_ALTERNATIVES[name], ALTERNATIVES, matrix=name)
        repairs.extend(log)
        mats.append(m)
    return DecisionProblem(
        goal=GOAL,
        criteria=CRITERIA,
        alternatives=ALTERNATIVES,
        criteria_matrix=cm,
        alternative_matrices=tuple(mats),
        mode="fuzzy",
        repair_log=tuple(repairs),
    )


def crisp_criteria_matrix():
    """Just the validated criteria matrix (it is reciprocal as printed)."""
    return validate_matrix(CRISP_CRITERIA, CRITERIA, reciprocity_tol=LENIENT_RECIPROCITY_TOL)
