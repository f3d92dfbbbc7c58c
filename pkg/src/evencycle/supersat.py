"""Supersaturation toolkit: threshold predicates, path lower bounds, experiments.

Every threshold with a fractional exponent is decided by comparing integer
powers, never floats.  Hidden constants of asymptotic bounds are set to 1 and
reported as such.  Logarithms are base 2, rounded up.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Collection, Iterable, Sequence

import numpy as np

from ._intmath import ceil_log2
from .errors import BudgetExceeded, NoEdges, SetsOverlap
from .generators import bipartite_gnm, bipartite_gnp
from .graph import Graph, edges_between
from .oracle import count_k_walks, enumerate_cycles

CSV_COLUMNS = ("L", "R", "m", "k", "n", "t", "ratio", "bound_partial", "hypothesis_flags")
# caps the (2k-1)-walk count of an experiment instance before brute-force counting
DEFAULT_ORACLE_BUDGET = 20_000_000


def extremal_hypothesis(L: int, R: int, m: int, k: int) -> bool:
    """``m > 100k(L + R + (LR)^((k+1)/(2k)))``, decided exactly."""
    if L < 1 or R < 1:
        raise ValueError("both sides must be non-empty")
    c = 100 * k
    residual = m - c * (L + R)
    return residual > 0 and residual ** (2 * k) > c ** (2 * k) * (L * R) ** (k + 1)


def partialsupersat_hypothesis(L: int, R: int, m: int) -> bool:
    """``m / ceil(log(L+R))^10 > L + R + (LR)^(2/3)``, decided exactly."""
    c10 = ceil_log2(L + R) ** 10
    residual = m - c10 * (L + R)
    return residual > 0 and residual ** 3 > c10 ** 3 * (L * R) ** 2


def disjoint_corollary_hypothesis(L: int, R: int, m: int, n: int) -> bool:
    """``m >= 200 ceil(log n)^10 max(R L^(1/3), L sqrt(R))``, decided exactly.

    ``L`` and ``R`` are swapped into ``L <= R`` first.
    """
    L, R = min(L, R), max(L, R)
    if L < 1:
        raise ValueError("both sides must be non-empty")
    c = 200 * ceil_log2(n) ** 10
    if m < 0:
        return False
    return m ** 3 >= c ** 3 * R ** 3 * L and m ** 2 >= c ** 2 * L * L * R


def peel_sets(g: Graph, A: Collection[int], B: Collection[int]) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """The three average-degree restrictions ``(B1, A1, B2)`` of a bipartite pair."""
    A, B = frozenset(A), frozenset(B)
    if A & B:
        raise SetsOverlap(f"sets share vertices {sorted(A & B)[:5]}")
    e = edges_between(g, A, B)
    if e == 0:
        raise NoEdges("e(A, B) = 0")

    def deg(v: int, S: frozenset[int]) -> int:
        return sum(1 for w in g.neighbors(v) if w in S)

    B1 = frozenset(v for v in B if 2 * len(B) * deg(v, A) >= e)
    e1 = edges_between(g, A, B1)
    A1 = frozenset(v for v in A if 2 * len(A) * deg(v, B1) >= e1)
    e2 = edges_between(g, A1, B1)
    B2 = frozenset(v for v in B1 if 2 * len(B1) * deg(v, A1) >= e2)
    return B1, A1, B2


def p2_lower_bound(L: int, R: int, m: int) -> Fraction | None:
    """``m^2 / (2R)``, or ``None`` when ``m < 2R`` (inapplicable)."""
    if R < 1 or m < 2 * R:
        return None
    return Fraction(m * m, 2 * R)


def p4_factors(g: Graph, A: Collection[int], B: Collection[int]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """The four factors of the path-generation count, with the actual peeled sizes."""
    A, B = frozenset(A), frozenset(B)
    B1, _, _ = peel_sets(g, A, B)
    m = edges_between(g, A, B)
    return (
        Fraction(m, 8),
        Fraction(m, 8 * len(B1)) - 1,
        Fraction(m, 4 * len(A)) - 1,
        Fraction(m, 2 * len(B)) - 2,
    )


def p4_formula(g: Graph, A: Collection[int], B: Collection[int]) -> Fraction:
    f1, f2, f3, f4 = p4_factors(g, A, B)
    return f1 * f2 * f3 * f4


def p4_lower_bound(g: Graph, A: Collection[int], B: Collection[int]) -> Fraction | None:
    """The explicit product, or ``None`` when ``e(A,B) < 50(|A|+|B|)``."""
    A, B = frozenset(A), frozenset(B)
    m = edges_between(g, A, B)
    if m == 0:
        raise NoEdges("e(A, B) = 0")
    if m < 50 * (len(A) + len(B)):
        return None
    return p4_formula(g, A, B)


def partialsupersat_rhs(L: int, R: int, m: int, n: int) -> Fraction:
    """Right-hand side of the partial supersaturation bound, hidden constant 1."""
    if not 100 <= L <= R:
        raise ValueError("requires 100 <= L <= R")
    dL = Fraction(m, L)
    dR = Fraction(m, R)
    factor = min(Fraction(1), dR ** 3 / L, dL ** 2 * dR ** 2 / L ** 2)
    return dR ** 3 * dL ** 3 * factor / ceil_log2(n) ** 70


@dataclass
class SupersatReport:
    L: int
    R: int
    m: int
    k: int
    n: int
    t_exact: int | None
    bound_conjecture: Fraction | None
    bound_partial: Fraction | None
    hypothesis_flags: dict[str, bool] = field(default_factory=dict)
    constant_note: str = "bounds are up to the theorem's constant (set to 1)"

    @property
    def ratio(self) -> Fraction | None:
        """``t L^k R^k / m^(2k)``; zero on an edgeless instance."""
        if self.t_exact is None:
            return None
        if self.m == 0:
            return Fraction(0)
        return Fraction(self.t_exact * self.L ** self.k * self.R ** self.k, self.m ** (2 * self.k))

    def flags_text(self) -> str:
        held = [name for name, ok in sorted(self.hypothesis_flags.items()) if ok]
        return ";".join(held) if held else "none"

    def as_row(self) -> dict[str, str]:
        def q(x: Fraction | int | None) -> str:
            return "-" if x is None else str(x)

        return {
            "L": str(self.L), "R": str(self.R), "m": str(self.m), "k": str(self.k), "n": str(self.n),
            "t": "not computed" if self.t_exact is None else str(self.t_exact),
            "ratio": q(self.ratio), "bound_partial": q(self.bound_partial),
            "hypothesis_flags": self.flags_text(),
        }


def hypothesis_flags(L: int, R: int, m: int, k: int, n: int) -> dict[str, bool]:
    lo, hi = min(L, R), max(L, R)
    return {
        "extremal": lo >= 1 and extremal_hypothesis(L, R, m, k),
        "p2": p2_lower_bound(L, R, m) is not None,
        "p4": m >= 50 * (L + R),
        "partialsupersat": lo >= 100 and partialsupersat_hypothesis(lo, hi, m),
        "disjoint_corollary": lo >= 1 and disjoint_corollary_hypothesis(L, R, m, max(n, 2)),
    }


def supersat_report(g: Graph, A: Collection[int], B: Collection[int], k: int,
                    count_cycles: bool = True, oracle_budget: int = DEFAULT_ORACLE_BUDGET) -> SupersatReport:
    A, B = frozenset(A), frozenset(B)
    if A & B:
        raise SetsOverlap(f"sets share vertices {sorted(A & B)[:5]}")
    L, R = len(A), len(B)
    m = edges_between(g, A, B)
    n = g.n
    t = None
    if count_cycles:
        walks = count_k_walks(g, 2 * k - 1)
        if walks > oracle_budget:
            raise BudgetExceeded(walks, oracle_budget)
        t = len(enumerate_cycles(g, k))
    lo, hi = min(L, R), max(L, R)
    partial = partialsupersat_rhs(lo, hi, m, max(n, 2)) if lo >= 100 and k == 3 else None
    conj = Fraction(m ** (2 * k), L ** k * R ** k) if L and R else None
    return SupersatReport(L, R, m, k, n, t, conj, partial, hypothesis_flags(L, R, m, k, n) if L and R else {})


def _trial_seed(seed: int, trial: int) -> int:
    return int(np.random.SeedSequence([seed, trial]).generate_state(1)[0])


def supersat_experiment(L: int, R: int, k: int, trials: int = 1, seed: int = 0,
                        edge_prob: float | None = None, m: int | None = None,
                        oracle_budget: int = DEFAULT_ORACLE_BUDGET) -> list[SupersatReport]:
    """Seeded random bipartite instances with brute-force cycle counts.

    Exactly one of ``edge_prob`` and ``m`` selects the model.  Raises
    ``BudgetExceeded`` when an instance is too large to count by brute force.
    """
    if (edge_prob is None) == (m is None):
        raise ValueError("give exactly one of edge_prob and m")
    reports = []
    for trial in range(trials):
        s = _trial_seed(seed, trial)
        g = bipartite_gnp(L, R, edge_prob, s) if edge_prob is not None else bipartite_gnm(L, R, m, s)
        reports.append(supersat_report(g, range(L), range(L, L + R), k, oracle_budget=oracle_budget))
    return reports


def reports_to_csv(reports: Iterable[SupersatReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(r.as_row())
    return buf.getvalue()


def hand_checked_cases() -> Sequence[tuple[str, bool, bool]]:
    """``(description, computed, expected)`` for the threshold arithmetic."""
    cases = [
        ("extremal (3,3,9,2)", extremal_hypothesis(3, 3, 9, 2), False),
        ("extremal k=2 L=R=5000 m=201e6", extremal_hypothesis(5000, 5000, 201 * 10 ** 6, 2), True),
        # threshold 200(2e6 + 1e9) = 200_400_000_000
        ("extremal k=2 L=R=10^6 m=200_400_000_001", extremal_hypothesis(10 ** 6, 10 ** 6, 200_400_000_001, 2), True),
        ("extremal k=2 L=R=10^6 m=200_400_000_000", extremal_hypothesis(10 ** 6, 10 ** 6, 200_400_000_000, 2), False),
        # k=3: (LR)^(2/3) with L=R=8 is 16, threshold 300 * 32 = 9600
        ("extremal k=3 L=R=8 m=9601", extremal_hypothesis(8, 8, 9601, 3), True),
        ("extremal k=3 L=R=8 m=9600", extremal_hypothesis(8, 8, 9600, 3), False),
        ("partialsupersat L=R=1000 m=10^5", partialsupersat_hypothesis(1000, 1000, 10 ** 5), False),
        # ceil(log 2) = 1, so the bound is 2 + 1 = 3
        ("partialsupersat L=R=1 m=4", partialsupersat_hypothesis(1, 1, 4), True),
        ("partialsupersat L=R=1 m=3", partialsupersat_hypothesis(1, 1, 3), False),
        # 200 * 1 * max(1 * 1, 1 * 1) with n = 2
        ("disjoint corollary L=R=1 n=2 m=200", disjoint_corollary_hypothesis(1, 1, 200, 2), True),
    ]
    return cases
