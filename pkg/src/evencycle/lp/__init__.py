"""Exact linear programming for the case analysis."""

from .cases import CaseId, LpReport, all_cases, build_case_lp, verify_all_cases, verify_case
from .model import GE, INFEASIBLE, LE, OPTIMAL, UNBOUNDED, Constraint, LinearProgram, LPBuilder, LpOutcome, verify_certificate
from .simplex import solve_lp_exact
from .vertices import enumerate_vertices, maximize_by_vertices

__all__ = [
    "CaseId", "Constraint", "GE", "INFEASIBLE", "LE", "LPBuilder", "LinearProgram", "LpOutcome",
    "LpReport", "OPTIMAL", "UNBOUNDED", "all_cases", "build_case_lp", "enumerate_vertices",
    "maximize_by_vertices", "solve_lp_exact", "verify_all_cases", "verify_case", "verify_certificate",
]
