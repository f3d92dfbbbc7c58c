"""Exact-rational linear programs: model, outcome and certificate checks."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

LE = "<="
GE = ">="


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: str
    bound: Fraction
    label: str = ""

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        """Non-negative iff ``x`` satisfies the constraint."""
        lhs = sum((c * xi for c, xi in zip(self.coeffs, x)), Fraction(0))
        return self.bound - lhs if self.relation == LE else lhs - self.bound

    def as_le(self) -> tuple[tuple[Fraction, ...], Fraction]:
        if self.relation == LE:
            return self.coeffs, self.bound
        return tuple(-c for c in self.coeffs), -self.bound


@dataclass(frozen=True)
class LinearProgram:
    """Maximize ``objective . x`` subject to the constraints; variables are free."""

    variables: tuple[str, ...]
    constraints: tuple[Constraint, ...]
    objective: tuple[Fraction, ...]

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * xi for c, xi in zip(self.objective, x)), Fraction(0))

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        return all(con.slack(x) >= 0 for con in self.constraints)


class LPBuilder:
    def __init__(self, variables: Sequence[str]) -> None:
        self.variables = tuple(variables)
        self._index = {v: i for i, v in enumerate(self.variables)}
        self.constraints: list[Constraint] = []

    def _vector(self, terms: Mapping[str, Fraction | int]) -> tuple[Fraction, ...]:
        vec = [Fraction(0)] * len(self.variables)
        for name, coeff in terms.items():
            vec[self._index[name]] += Fraction(coeff)
        return tuple(vec)

    def add(self, terms: Mapping[str, Fraction | int], relation: str, bound: Fraction | int, label: str = "") -> None:
        if relation not in (LE, GE):
            raise ValueError(f"unknown relation {relation!r}")
        self.constraints.append(Constraint(self._vector(terms), relation, Fraction(bound), label))

    def build(self, objective: Mapping[str, Fraction | int]) -> LinearProgram:
        return LinearProgram(self.variables, tuple(self.constraints), self._vector(objective))


OPTIMAL = "Optimal"
INFEASIBLE = "Infeasible"
UNBOUNDED = "Unbounded"


@dataclass
class LpOutcome:
    status: str
    optimum: Fraction | None = None
    primal: tuple[Fraction, ...] | None = None
    # one multiplier per constraint, applied to its "<=" orientation
    dual: tuple[Fraction, ...] | None = None
    pivots: int = 0
    notes: list[str] = field(default_factory=list)

    def certificate_hash(self) -> str:
        h = hashlib.sha256()
        h.update(self.status.encode())
        for part in (self.primal or ()) + (self.dual or ()):
            h.update(f"{part.numerator}/{part.denominator};".encode())
        return h.hexdigest()[:16]


def verify_certificate(lp: LinearProgram, out: LpOutcome) -> bool:
    """Re-check an Optimal outcome by exact substitution, trusting nothing else.

    The primal point must satisfy every constraint and attain the optimum; the
    dual multipliers must be non-negative, reproduce the objective as a
    combination of constraint rows, and give the same bound.  Weak duality then
    proves optimality.
    """
    if out.status != OPTIMAL or out.primal is None or out.dual is None or out.optimum is None:
        return False
    if len(out.dual) != len(lp.constraints) or len(out.primal) != len(lp.variables):
        return False
    if not lp.is_feasible(out.primal) or lp.value(out.primal) != out.optimum:
        return False
    if any(y < 0 for y in out.dual):
        return False
    combo = [Fraction(0)] * len(lp.variables)
    bound = Fraction(0)
    for y, con in zip(out.dual, lp.constraints):
        if y == 0:
            continue
        row, b = con.as_le()
        for j, a in enumerate(row):
            combo[j] += y * a
        bound += y * b
    return tuple(combo) == lp.objective and bound == out.optimum


def format_fraction(x: Fraction | None) -> str:
    if x is None:
        return "-"
    return f"{x.numerator}/{x.denominator}"
