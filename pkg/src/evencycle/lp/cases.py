"""The 36 case linear programs and their exact verification.

A case fixes which of each adjacent pair of layer sizes is larger (``B12``,
``B23``) and which of three regime terms dominates for each pair (``D12``,
``D23``).  Every case LP is solved by the simplex and again by vertex
enumeration; both must agree and every optimum must be at most 8/5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .model import GE, INFEASIBLE, LE, OPTIMAL, LinearProgram, LPBuilder, LpOutcome, verify_certificate
from .simplex import solve_lp_exact
from .vertices import maximize_by_vertices

VARIABLES = ("x1", "x2", "x3", "delta_star", "delta1", "delta2", "delta3", "tau")
DELTAS = ("delta_star", "delta1", "delta2", "delta3")
TARGET = Fraction(8, 5)
DELTA_CAP = Fraction(2, 5)


@dataclass(frozen=True, order=True)
class CaseId:
    B12: int
    B23: int
    D12: int
    D23: int

    def __post_init__(self) -> None:
        if self.B12 not in (1, 2) or self.B23 not in (2, 3):
            raise ValueError(f"bad ordering indices in {self}")
        if self.D12 not in (1, 2, 3) or self.D23 not in (1, 2, 3):
            raise ValueError(f"bad regime indices in {self}")

    def label(self) -> str:
        return f"({self.B12},{self.B23},{self.D12},{self.D23})"


def all_cases() -> list[CaseId]:
    return [CaseId(*c) for c in product((1, 2), (2, 3), (1, 2, 3), (1, 2, 3))]


def _sub(a: dict[str, Fraction], b: dict[str, Fraction]) -> dict[str, Fraction]:
    out = dict(a)
    for name, c in b.items():
        out[name] = out.get(name, Fraction(0)) - c
    return out


def _pair_block(lp: LPBuilder, lo: str, hi: str, delta: str, larger: str, regime: int, tag: str) -> None:
    """Regime constraints for the pair of layer sizes ``(lo, hi)``.

    ``larger`` names the variable that is the max of the two.
    """
    smaller = hi if larger == lo else lo
    third = Fraction(1, 3)
    half = Fraction(1, 2)
    v = {
        1: {lo: Fraction(1), delta: Fraction(1)},
        2: {larger: Fraction(1), smaller: third},
        3: {smaller: Fraction(1), larger: half},
    }
    for other in (1, 2, 3):
        if other != regime:
            lp.add(_sub(v[regime], v[other]), GE, 0, f"{tag}: v{regime} >= v{other}")
    if regime == 1:
        # tau >= 6(lo + delta) - 3(lo + hi)
        lp.add({"tau": 1, lo: -3, delta: -6, hi: 3}, GE, 0, f"{tag}: tau lower bound")


def build_case_lp(case: CaseId, delta_cap: Fraction = DELTA_CAP) -> LinearProgram:
    lp = LPBuilder(VARIABLES)
    for x in ("x1", "x2", "x3"):
        lp.add({x: 1}, GE, 0, f"{x} >= 0")
        lp.add({x: 1}, LE, 1, f"{x} <= 1")
    for d in DELTAS:
        lp.add({d: 1}, GE, 0, f"{d} >= 0")
        lp.add({d: 1}, LE, delta_cap, f"{d} <= cap")
    lp.add({"tau": 1}, GE, 0, "tau >= 0")
    for i in (1, 2, 3):
        lp.add({f"delta{i}": 1, "delta_star": -1}, LE, 0, f"delta{i} <= delta_star")
    lp.add({"delta_star": 1, "x1": 1}, LE, 1, "delta_star + x1 <= 1")
    for i in (1, 2, 3):
        lp.add({f"delta{i}": 1, f"x{i}": 1}, LE, 1, f"delta{i} + x{i} <= 1")

    big12 = "x1" if case.B12 == 1 else "x2"
    big23 = "x2" if case.B23 == 2 else "x3"
    lp.add({big12: 1, ("x2" if big12 == "x1" else "x1"): -1}, GE, 0, f"{big12} is larger in (1,2)")
    lp.add({big23: 1, ("x3" if big23 == "x2" else "x2"): -1}, GE, 0, f"{big23} is larger in (2,3)")
    _pair_block(lp, "x1", "x2", "delta1", big12, case.D12, "pair12")
    _pair_block(lp, "x2", "x3", "delta2", big23, case.D23, "pair23")

    objective = {"x1": 1, "delta1": 1, "delta2": 1, "delta3": 1}
    lp.add({**objective, "tau": -1}, GE, 0, "objective >= tau")
    return lp.build(objective)


def enumeration_box(delta_cap: Fraction = DELTA_CAP) -> list[tuple[Fraction, Fraction]]:
    """A box implied by every case's constraints (tau <= x1 + 3 * cap)."""
    unit = (Fraction(0), Fraction(1))
    cap = (Fraction(0), delta_cap)
    return [unit, unit, unit, cap, cap, cap, cap, (Fraction(0), 1 + 3 * delta_cap)]


@dataclass
class CaseResult:
    case: CaseId
    status: str
    optimum: Fraction | None
    certificate_ok: bool
    enumeration_status: str
    enumeration_optimum: Fraction | None
    constraints: int
    certificate: str
    outcome: LpOutcome = field(repr=False)

    @property
    def agrees(self) -> bool:
        return self.status == self.enumeration_status and self.optimum == self.enumeration_optimum


@dataclass
class LpReport:
    cases: list[CaseResult]
    delta_cap: Fraction

    @property
    def global_max(self) -> Fraction | None:
        values = [c.optimum for c in self.cases if c.optimum is not None]
        return max(values) if values else None

    @property
    def attaining(self) -> list[CaseId]:
        top = self.global_max
        return [c.case for c in self.cases if top is not None and c.optimum == top]

    @property
    def all_certified(self) -> bool:
        return all(c.certificate_ok for c in self.cases if c.status == OPTIMAL)

    @property
    def all_agree(self) -> bool:
        return all(c.agrees for c in self.cases)

    @property
    def within_target(self) -> bool:
        return all(c.status in (OPTIMAL, INFEASIBLE) for c in self.cases) and all(
            c.optimum <= TARGET for c in self.cases if c.optimum is not None
        )

    @property
    def passed(self) -> bool:
        return self.within_target and self.all_certified and self.all_agree


def verify_case(case: CaseId, delta_cap: Fraction = DELTA_CAP, cross_check: bool = True) -> CaseResult:
    lp = build_case_lp(case, delta_cap)
    out = solve_lp_exact(lp)
    if cross_check:
        # cutting with the coupling rows first keeps the intermediate polytopes small
        reordered = LinearProgram(lp.variables, lp.constraints[::-1], lp.objective)
        enum = maximize_by_vertices(reordered, enumeration_box(delta_cap))
    else:
        enum = LpOutcome(out.status, out.optimum)
    return CaseResult(
        case=case,
        status=out.status,
        optimum=out.optimum,
        certificate_ok=out.status != OPTIMAL or verify_certificate(lp, out),
        enumeration_status=enum.status,
        enumeration_optimum=enum.optimum,
        constraints=len(lp.constraints),
        certificate=out.certificate_hash(),
        outcome=out,
    )


def verify_all_cases(delta_cap: Fraction = DELTA_CAP, cross_check: bool = True) -> LpReport:
    return LpReport([verify_case(c, delta_cap, cross_check) for c in all_cases()], delta_cap)
