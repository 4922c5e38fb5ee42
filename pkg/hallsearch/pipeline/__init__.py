"""
Candidate Pipeline - cells, candidates and their evaluation

- candidates: admissible cells, cube roots of C2, lifting and vertex placement
- lemma: closed forms for k(x0 + i) and residue diagnostics
- evaluator: exact k(x) in a window around x0
"""

from .candidates import (
    BuilderStats,
    Candidate,
    CandidateBuilder,
    SearchCell,
    admissible_cells,
    build_candidates,
    c2_cap,
    lift_k0,
    select_n,
    solve_a0,
)
from .evaluator import CandidateEvaluation, evaluate_candidate, evaluate_window, verify_point
from .lemma import CubicPolynomial, c2_residue, i_residue_class, k_from_lemma, polynomial_p0

__all__ = [
    "BuilderStats",
    "Candidate",
    "CandidateBuilder",
    "SearchCell",
    "admissible_cells",
    "build_candidates",
    "c2_cap",
    "lift_k0",
    "select_n",
    "solve_a0",
    "CandidateEvaluation",
    "evaluate_candidate",
    "evaluate_window",
    "verify_point",
    "CubicPolynomial",
    "c2_residue",
    "i_residue_class",
    "k_from_lemma",
    "polynomial_p0",
]
