"""AHP / fuzzy-AHP decision engine.

Rank a finite set of alternatives against weighted criteria from pairwise
judgments: classical comparison matrices with eigenvector or geometric-mean
weights and consistency scoring, or triangular-fuzzy judgments resolved by
extent analysis.  Ships a bundled case study, a CLI, and an HTTP service
for interactive elicitation.
"""

from .comparison import (
    CellRepair,
    ComparisonMatrix,
    ConsistencyReport,
    WeightVector,
    consistency,
    eigen_weights,
    geometric_mean_weights,
    repair_matrix,
    repair_matrix_logged,
    validate_matrix,
)
from .engine import (
    ComparisonReport,
    DecisionProblem,
    NewAlternative,
    ProbeReport,
    RankedResult,
    aggregate_global,
    compare_rankings,
    defuzzify_matrix,
    fuzzify_problem,
    rank_reversal_probe,
    solve_crisp,
    solve_fuzzy,
    what_if_attitude,
)
from .errors import AhpError
from .extent import (
    ExtentSet,
    PossibilityMatrix,
    extent_weights,
    possibility,
    possibility_matrix,
    synthetic_extents,
)
from .fuzzy import (
    FuzzyMatrix,
    Tfn,
    defuzzify,
    membership_at,
    parse_tfn,
    repair_fuzzy_matrix,
    scale_to_tfn,
    tfn_add,
    tfn_invert,
    tfn_mul,
    validate_fuzzy_matrix,
)
from .store import import_matrix_csv, load_problem, load_result, save_result

__version__ = "0.1.0"

__all__ = [
    "AhpError",
    "CellRepair",
    "ComparisonMatrix",
    "ComparisonReport",
    "ConsistencyReport",
    "DecisionProblem",
    "ExtentSet",
    "FuzzyMatrix",
    "NewAlternative",
    "PossibilityMatrix",
    "ProbeReport",
    "RankedResult",
    "Tfn",
    "WeightVector",
    "aggregate_global",
    "compare_rankings",
    "consistency",
    "defuzzify",
    "defuzzify_matrix",
    "eigen_weights",
    "extent_weights",
    "fuzzify_problem",
    "geometric_mean_weights",
    "import_matrix_csv",
    "load_problem",
    "load_result",
    "membership_at",
    "parse_tfn",
    "possibility",
    "possibility_matrix",
    "rank_reversal_probe",
    "repair_fuzzy_matrix",
    "repair_matrix",
    "repair_matrix_logged",
    "save_result",
    "scale_to_tfn",
    "solve_crisp",
    "solve_fuzzy",
    "synthetic_extents",
    "tfn_add",
    "tfn_invert",
    "tfn_mul",
    "validate_fuzzy_matrix",
    "validate_matrix",
    "what_if_attitude",
]
