"""Two-phase tableau simplex over ``fractions.Fraction`` with Bland's rule."""

from __future__ import annotations

from fractions import Fraction

from .model import INFEASIBLE, OPTIMAL, UNBOUNDED, LinearProgram, LpOutcome

_ZERO = Fraction(0)


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]) -> None:
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        p = row[c]
        if p != 1:
            self.rows[r] = row = [v / p for v in row]
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[c]
                if f:
                    self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        rc = list(cost)
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[r]
                for j in range(len(rc)):
                    rc[j] -= cb * row[j]
        return rc

    def maximize(self, cost: list[Fraction], allowed: int) -> str:
        """Bland's rule over columns ``< allowed``; returns 'optimal' or 'unbounded'."""
        while True:
            rc = self.reduced_costs(cost)
            enter = next((j for j in range(allowed) if rc[j] > 0), None)
            if enter is None:
                return "optimal"
            best = None
            for r, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter)

    def value_of(self, col: int) -> Fraction:
        for r, b in enumerate(self.basis):
            if b == col:
                return self.rows[r][-1]
        return _ZERO


def solve_lp_exact(lp: LinearProgram) -> LpOutcome:
    """Solve ``lp`` exactly; Optimal outcomes carry primal and dual certificates.

    Free variables are split into positive and negative parts; every
    constraint gets its own slack column, and rows with a negative right-hand
    side get an artificial variable for phase one.
    """
    nvar = len(lp.variables)
    m = len(lp.constraints)
    nstruct = 2 * nvar
    slack0 = nstruct
    art0 = nstruct + m
    neg_rows = [i for i, con in enumerate(lp.constraints) if con.as_le()[1] < 0]
    width = art0 + len(neg_rows)

    rows: list[list[Fraction]] = []
    basis: list[int] = []
    art_of = {i: art0 + j for j, i in enumerate(neg_rows)}
    for i, con in enumerate(lp.constraints):
        a, b = con.as_le()
        row = list(a) + [-x for x in a] + [_ZERO] * (width - nstruct) + [b]
        row[slack0 + i] = Fraction(1)
        if i in art_of:
            row = [-x for x in row]
            row[art_of[i]] = Fraction(1)
            basis.append(art_of[i])
        else:
            basis.append(slack0 + i)
        rows.append(row)
    tab = _Tableau(rows, basis)

    if neg_rows:
        phase1 = [_ZERO] * width
        for col in art_of.values():
            phase1[col] = Fraction(-1)
        tab.maximize(phase1, width)
        if sum(tab.value_of(col) for col in art_of.values()) > 0:
            return LpOutcome(INFEASIBLE, pivots=tab.pivots)
        for r, b in enumerate(tab.basis):
            if b >= art0:
                col = next((j for j in range(art0) if tab.rows[r][j] != 0), None)
                if col is None:
                    # cannot happen: slack columns give the rows full rank
                    raise AssertionError("redundant row in slack form")
                tab.pivot(r, col)

    cost = list(lp.objective) + [-c for c in lp.objective] + [_ZERO] * (width - nstruct)
    if tab.maximize(cost, art0) == "unbounded":
        return LpOutcome(UNBOUNDED, pivots=tab.pivots)

    z = [tab.value_of(j) for j in range(nstruct)]
    x = tuple(z[j] - z[nvar + j] for j in range(nvar))
    # duals: y_i = c_B . (tableau column of slack i); row sign flips cancel out
    dual = []
    for i in range(m):
        col = slack0 + i
        dual.append(sum((cost[b] * tab.rows[r][col] for r, b in enumerate(tab.basis)), _ZERO))
    return LpOutcome(OPTIMAL, optimum=lp.value(x), primal=x, dual=tuple(dual), pivots=tab.pivots)
