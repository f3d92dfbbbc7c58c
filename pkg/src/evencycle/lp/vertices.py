"""Vertex enumeration of bounded polytopes by the double description method.

Starts from the vertices of a bounding box and cuts with one half-space at a
time, creating a new vertex on every edge that crosses the cutting plane.  Two
vertices span an edge iff no third vertex is tight on every constraint they
share (the combinatorial adjacency test), which is exact for degenerate
polytopes too.  Arithmetic is exact; no simplex machinery is shared.

Points are kept in integer homogeneous form ``(numerators, denominator)`` with
the gcd divided out, so equality of points is equality of tuples.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, lcm
from typing import Sequence

from .model import INFEASIBLE, OPTIMAL, LinearProgram, LpOutcome

Point = tuple[Fraction, ...]
# homogeneous point: integer numerators followed by a positive denominator
_HPoint = tuple[int, ...]
# integer row a.x <= b stored sparsely as ((index, coeff), ...), b
_Row = tuple[tuple[tuple[int, int], ...], int]


def _integer_row(a: Sequence[Fraction], b: Fraction) -> _Row:
    scale = reduce(lcm, (Fraction(c).denominator for c in (*a, b)), 1)
    return tuple((j, int(c * scale)) for j, c in enumerate(a) if c), int(b * scale)


def _normalize(nums: list[int], den: int) -> _HPoint:
    if den < 0:
        nums = [-x for x in nums]
        den = -den
    g = reduce(gcd, nums, den)
    return tuple(x // g for x in nums) + (den // g,)


def _slack(row: _Row, p: _HPoint) -> int:
    """``(b - a.x) * denominator``; same sign as the true slack."""
    coeffs, b = row
    return b * p[-1] - sum(c * p[j] for j, c in coeffs)


def _tight_mask(p: _HPoint, rows: list[_Row]) -> int:
    mask = 0
    for idx, row in enumerate(rows):
        if _slack(row, p) == 0:
            mask |= 1 << idx
    return mask


def _members(masks: list[int], width: int) -> list[int]:
    """Per constraint, the bitmap of vertices tight on it."""
    out = [0] * width
    for vi, mk in enumerate(masks):
        bit = 1 << vi
        while mk:
            low = mk & -mk
            out[low.bit_length() - 1] |= bit
            mk ^= low
    return out


def enumerate_vertices(lp: LinearProgram, box: Sequence[tuple[Fraction, Fraction]]) -> list[Point]:
    """All vertices of ``{x : constraints} ∩ box``, sorted.

    ``box`` must contain the feasible region; if it is implied by the
    constraints (the intended use) the result is exactly the vertex set of the
    LP's polytope.
    """
    d = len(lp.variables)
    if len(box) != d:
        raise ValueError("box needs one interval per variable")
    rows: list[_Row] = []
    for j, (lo, hi) in enumerate(box):
        e = [Fraction(int(i == j)) for i in range(d)]
        rows.append(_integer_row([-x for x in e], -Fraction(lo)))
        rows.append(_integer_row(e, Fraction(hi)))
    corners = product(*[(Fraction(lo), Fraction(hi)) for lo, hi in box])
    vertices: list[_HPoint] = []
    for corner in set(corners):
        den = reduce(lcm, (c.denominator for c in corner), 1)
        vertices.append(_normalize([int(c * den) for c in corner], den))
    vertices.sort()
    masks = [_tight_mask(p, rows) for p in vertices]

    for con in lp.constraints:
        row = _integer_row(*con.as_le())
        idx = len(rows)
        rows.append(row)
        slack = [_slack(row, p) for p in vertices]
        neg = [i for i, s in enumerate(slack) if s < 0]
        if not neg:
            masks = [mk | (1 << idx) if s == 0 else mk for mk, s in zip(masks, slack)]
            continue
        pos = [i for i, s in enumerate(slack) if s > 0]
        members = _members(masks, idx)
        everyone = (1 << len(vertices)) - 1
        tight: dict[_HPoint, int] = {
            vertices[i]: masks[i] | ((1 << idx) if s == 0 else 0) for i, s in enumerate(slack) if s >= 0
        }
        for i in pos:
            for j in neg:
                common = masks[i] & masks[j]
                if bin(common).count("1") < d - 1:
                    continue
                witnesses = everyone
                mk = common
                while mk and witnesses:
                    low = mk & -mk
                    witnesses &= members[low.bit_length() - 1]
                    mk ^= low
                if witnesses & ~((1 << i) | (1 << j)):
                    continue
                u, w = vertices[i], vertices[j]
                su, sw = slack[i], slack[j]
                # the crossing point (s_u w - s_w u) / (s_u - s_w), cleared of denominators
                p = _normalize([su * wk - sw * uk for uk, wk in zip(u[:-1], w[:-1])], su * w[-1] - sw * u[-1])
                if p not in tight:
                    tight[p] = _tight_mask(p, rows)
        if not tight:
            return []
        vertices = sorted(tight)
        masks = [tight[p] for p in vertices]
    return sorted(tuple(Fraction(x, p[-1]) for x in p[:-1]) for p in vertices)


def maximize_by_vertices(lp: LinearProgram, box: Sequence[tuple[Fraction, Fraction]]) -> LpOutcome:
    vertices = enumerate_vertices(lp, box)
    if not vertices:
        return LpOutcome(INFEASIBLE)
    best = max(vertices, key=lp.value)
    return LpOutcome(OPTIMAL, optimum=lp.value(best), primal=best, notes=[f"{len(vertices)} vertices"])
