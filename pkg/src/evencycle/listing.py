"""Color-coding listing and detection of 2k-cycles.

For every vertex ``v_i`` in ascending degree order the search looks only at
the subgraph ``G_i`` reached by a k-step BFS through vertices that are not
above ``v_i``.  A cycle is therefore reported exactly at the iteration of its
highest-ranked vertex.  Inside ``G_i`` colorful cycles through ``v_i`` are
found by a DP over (vertex, color set) states, vectorized across all random
colorings at once.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping

import numpy as np

from ._intmath import ceil_pow_fraction
from .errors import BudgetExceeded, InvariantViolation
from .graph import DegreeOrder, Graph, bfs_edge_set, degree_order
from .oracle import Cycle, canonical_cycle

DEFAULT_EPSILON = Fraction(1, 10**9)
_U64 = np.uint64
_CHUNK_ELEMENTS = 1 << 21


@dataclass(frozen=True)
class ListingConfig:
    k: int
    delta: int
    seed: int = 0
    epsilon: Fraction = DEFAULT_EPSILON
    budget: int | None = None

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if self.delta < 1:
            raise ValueError("delta must be at least 1")
        eps = Fraction(self.epsilon)
        if not 0 < eps < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        object.__setattr__(self, "epsilon", eps)


def colorful_probability(k: int) -> Fraction:
    """Chance that a fixed 2k-cycle receives 2k distinct colors out of 2k."""
    return Fraction(math.factorial(2 * k), (2 * k) ** (2 * k))


def repetitions(n: int, k: int, epsilon: Fraction) -> int:
    """Colorings per iteration so that all <= n^(2k) cycles survive w.p. >= 1-eps.

    Uses the exact colorful probability rather than the cruder 2^(-2k) bound.
    """
    p = float(colorful_probability(k))
    num = 2 * k * math.log(max(n, 1)) + math.log(1 / float(epsilon))
    return max(1, math.ceil(num / -math.log1p(-p)))


def delta_for(m: int, k: int) -> int:
    """``ceil(m^(2/(k+1)))``, at least 1."""
    return max(1, ceil_pow_fraction(m, 2, k + 1))


@dataclass
class WorkCounters:
    """Machine-independent work tallies; one unit = one adjacency scan step."""

    below_delta: int = 0
    above_delta: int = 0
    coloring: int = 0
    materialize: int = 0
    discoveries: int = 0
    searched: int = 0

    def total(self) -> int:
        return self.below_delta + self.above_delta + self.coloring + self.materialize

    def merge(self, other: "WorkCounters") -> None:
        self.below_delta += other.below_delta
        self.above_delta += other.above_delta
        self.coloring += other.coloring
        self.materialize += other.materialize
        self.discoveries += other.discoveries
        self.searched += other.searched

    def as_dict(self) -> dict[str, int]:
        return {
            "below_delta_walk_work": self.below_delta,
            "above_delta_work": self.above_delta,
            "coloring_work": self.coloring,
            "materialize_work": self.materialize,
            "colorful_discoveries": self.discoveries,
            "iterations_searched": self.searched,
            "total_work": self.total(),
        }


@dataclass
class ListingResult:
    cycles: frozenset[Cycle]
    counters: WorkCounters
    rounds: int
    delta: int
    k: int
    found_at: dict[Cycle, int] = field(default_factory=dict)
    budget_exhausted: bool = False

    @property
    def t(self) -> int:
        return len(self.cycles)

    def sorted_cycles(self) -> list[Cycle]:
        return sorted(self.cycles)


# --- colorful-path kernels -------------------------------------------------


class _BitsetKernel:
    """States packed as a 2^(2k)-bit set of color masks in one uint64 (2k <= 6)."""

    def __init__(self, k: int) -> None:
        self.colors = 2 * k
        masks = range(1 << self.colors)
        self.full = (1 << self.colors) - 1
        self.notc = np.array([sum(1 << s for s in masks if not s >> c & 1) for c in range(self.colors)], dtype=_U64)
        self.shift = np.array([1 << c for c in range(self.colors)], dtype=_U64)
        self.low = [_U64(sum(1 << s for s in masks if not s >> b & 1)) for b in range(self.colors)]
        self.elems_per_state = 1

    def levels(self, src, starts, source, colors, k):
        nl, C = colors.shape
        R = np.zeros((nl, C), dtype=_U64)
        R[source] = np.left_shift(_U64(1), self.shift[colors[source]])
        out = [R]
        for _ in range(k):
            acc = np.bitwise_or.reduceat(out[-1][src], starts, axis=0)
            out.append((acc & self.notc[colors]) << self.shift[colors])
        return out

    def hits(self, R, source, colors):
        B = R[-1]
        cbits = np.left_shift(_U64(1), colors.astype(_U64))
        X = _U64(self.full) ^ (cbits | cbits[source])
        P = B.copy()
        for b in range(self.colors):
            step = _U64(1 << b)
            low = self.low[b]
            swapped = ((P & low) << step) | ((P >> step) & low)
            P = np.where((X >> _U64(b)) & _U64(1) != 0, swapped, P)
        joined = B & P
        rs, ws = np.nonzero(joined.T)
        for rho, w in zip(rs.tolist(), ws.tolist()):
            bits = int(joined[w, rho])
            x = int(X[w, rho])
            yield rho, w, [(s, s ^ x) for s in _iter_bits(bits) if s < s ^ x]

    @staticmethod
    def column(R, level, rho):
        return R[level][:, rho].tolist()


class _MaskKernel:
    """States as an explicit boolean axis over all 2^(2k) masks (any k)."""

    def __init__(self, k: int) -> None:
        self.colors = 2 * k
        M = 1 << self.colors
        self.full = M - 1
        ar = np.arange(M)
        self.xor_table = np.stack([ar ^ (1 << c) for c in range(self.colors)])
        self.has_table = np.stack([(ar >> c) & 1 for c in range(self.colors)]).astype(np.uint8)
        self.elems_per_state = M

    def levels(self, src, starts, source, colors, k):
        nl, C = colors.shape
        M = 1 << self.colors
        R = np.zeros((nl, C, M), dtype=np.uint8)
        R[source, np.arange(C), 1 << colors[source].astype(np.int64)] = 1
        out = [R]
        for _ in range(k):
            acc = np.bitwise_or.reduceat(out[-1][src], starts, axis=0)
            moved = np.take_along_axis(acc, self.xor_table[colors], axis=2)
            out.append(moved & self.has_table[colors])
        return out

    def hits(self, R, source, colors):
        B = R[-1]
        c64 = colors.astype(np.int64)
        X = self.full ^ ((1 << c64) | (1 << c64[source]))
        idx = np.arange(B.shape[2])[None, None, :] ^ X[..., None]
        joined = B & np.take_along_axis(B, idx, axis=2)
        rs, ws = np.nonzero(joined.any(axis=2).T)
        for rho, w in zip(rs.tolist(), ws.tolist()):
            x = int(X[w, rho])
            masks = [s for s in np.flatnonzero(joined[w, rho]).tolist() if s < s ^ x]
            yield rho, w, [(s, s ^ x) for s in masks]

    @staticmethod
    def column(R, level, rho):
        packed = np.packbits(R[level][:, rho, :], axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _kernel(k: int):
    return _BitsetKernel(k) if 2 * k <= 6 else _MaskKernel(k)


class _LocalSearch:
    """Colorful 2k-cycles through one source in a small relabelled graph."""

    def __init__(self, adj: list[list[int]], source: int, k: int) -> None:
        self.adj = adj
        self.source = source
        self.k = k
        dst = np.repeat(np.arange(len(adj)), [len(a) for a in adj])
        self.src = np.fromiter((w for a in adj for w in a), dtype=np.int64, count=len(dst))
        counts = np.array([len(a) for a in adj])
        self.starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
        self.directed_edges = len(dst)
        self.kernel = _kernel(k)

    def chunk_size(self, rounds: int) -> int:
        per_round = max(1, self.directed_edges * self.kernel.elems_per_state)
        return max(1, min(rounds, _CHUNK_ELEMENTS // per_round))

    def run(self, colors: np.ndarray, stop_first: bool = False) -> tuple[set[tuple[int, ...]], int, int, int]:
        """``colors`` has shape (local vertices, rounds).

        Returns the distinct local cycles in canonical form, the DP work, the
        backtracking work and the number of colorful discoveries (duplicates
        across rounds included).
        """
        k = self.k
        kern = self.kernel
        R = kern.levels(self.src, self.starts, self.source, colors, k)
        work = colors.shape[1] * k * self.directed_edges
        steps = 0
        discoveries = 0
        found: set[tuple[int, ...]] = set()
        adj = self.adj
        cur_rho = -1
        cols: list[list[int]] = []
        col_of: list[int] = []
        for rho, w, pairs in kern.hits(R, self.source, colors):
            if rho != cur_rho:
                cur_rho = rho
                cols = [kern.column(R, lvl, rho) for lvl in range(k + 1)]
                col_of = colors[:, rho].tolist()
            for s1, s2 in pairs:
                halves = []
                for mask in (s1, s2):
                    # partial paths (x_l, ..., w) with the color mask still to cover
                    partial = [((w,), mask ^ (1 << col_of[w]))]
                    for level in range(k - 1, 0, -1):
                        below = cols[level]
                        nxt = []
                        for path, m in partial:
                            for u in adj[path[0]]:
                                steps += 1
                                if below[u] >> m & 1:
                                    nxt.append(((u,) + path, m ^ (1 << col_of[u])))
                        partial = nxt
                    halves.append(partial)
                for p1, _ in halves[0]:
                    for p2, _ in halves[1]:
                        # p1, p2 run from a neighbour of the source to w
                        discoveries += 1
                        found.add(canonical_cycle((self.source,) + p1 + p2[-2::-1]))
                        if stop_first:
                            return found, work, steps, discoveries
        return found, work, steps, discoveries


def _two_core(adj: dict[int, set[int]]) -> None:
    stack = [v for v, nb in adj.items() if len(nb) < 2]
    while stack:
        v = stack.pop()
        nb = adj.pop(v, None)
        if nb is None:
            continue
        for w in nb:
            wn = adj.get(w)
            if wn is not None:
                wn.discard(v)
                if len(wn) < 2:
                    stack.append(w)


def _relabel(adj: dict[int, set[int]]) -> tuple[list[int], list[list[int]]]:
    verts = sorted(adj)
    local = {v: j for j, v in enumerate(verts)}
    return verts, [sorted(local[w] for w in adj[v]) for v in verts]


def _coloring_rng(seed: int, iteration: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, iteration]))


@dataclass
class _IterationOutcome:
    iteration: int
    cycles: list[Cycle]
    counters: WorkCounters


def _run_iteration(g: Graph, order: DegreeOrder, i: int, k: int, delta: int, seed: int,
                   rounds: int, stop_first: bool, spend: Callable[[int], None]) -> _IterationOutcome:
    v = order.by_rank[i]
    rank = order.rank
    counters = WorkCounters()
    _, edges = bfs_edge_set(g, v, k, lambda w: rank[w] <= i)
    if g.degree(v) <= delta:
        counters.below_delta += len(edges)
    else:
        counters.above_delta += len(edges)
    spend(len(edges))
    outcome = _IterationOutcome(i, [], counters)
    if len(edges) < 2 * k:
        return outcome

    local: dict[int, set[int]] = {}
    for a, b in edges:
        local.setdefault(a, set()).add(b)
        local.setdefault(b, set()).add(a)
    # every cycle lives in the 2-core
    _two_core(local)
    if v not in local:
        return outcome

    verts, ladj = _relabel(local)
    search = _LocalSearch(ladj, verts.index(v), k)
    counters.searched += 1
    colors_all = _coloring_rng(seed, i).integers(0, 2 * k, size=(rounds, len(verts)), dtype=np.uint8)
    chunk = search.chunk_size(rounds)
    seen: set[Cycle] = set()
    for start in range(0, rounds, chunk):
        cols = np.ascontiguousarray(colors_all[start:start + chunk].T)
        spend(cols.shape[1] * k * search.directed_edges)
        raw, work, steps, hits = search.run(cols, stop_first=stop_first)
        counters.coloring += work
        counters.materialize += steps
        counters.discoveries += hits
        spend(steps)
        for loc in sorted(raw):
            # relabelling is order preserving, so canonical form carries over
            cyc = Cycle(verts[j] for j in loc)
            if cyc not in seen:
                if len(cyc) != 2 * k or not cyc.is_valid_in(g) or order.maximum(cyc) != v:
                    raise InvariantViolation(f"emitted non-cycle {cyc} at iteration {i}")
                seen.add(cyc)
                outcome.cycles.append(cyc)
        if stop_first and outcome.cycles:
            break
    return outcome


class _Budget:
    def __init__(self, limit: int | None) -> None:
        self.limit = limit
        self.used = 0

    def spend(self, units: int) -> None:
        self.used += units
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.used, self.limit)


def run_listing(g: Graph, cfg: ListingConfig, *, order: DegreeOrder | None = None,
                stop_first: bool = False, threads: int = 1) -> ListingResult:
    """Full listing pass with counters; see :func:`list_c2k` for the plain set."""
    order = order or degree_order(g)
    rounds = repetitions(g.n, cfg.k, cfg.epsilon)
    result = ListingResult(frozenset(), WorkCounters(), rounds, cfg.delta, cfg.k)
    budget = _Budget(cfg.budget)
    found: dict[Cycle, int] = {}

    def absorb(out: _IterationOutcome) -> None:
        result.counters.merge(out.counters)
        for cyc in out.cycles:
            found.setdefault(cyc, out.iteration)

    if threads <= 1:
        for i in range(g.n):
            absorb(_run_iteration(g, order, i, cfg.k, cfg.delta, cfg.seed, rounds, stop_first, budget.spend))
            if stop_first and found:
                break
    else:
        # per-iteration budgets are not shared across workers; the merged total is checked in order
        def work(i: int) -> _IterationOutcome:
            return _run_iteration(g, order, i, cfg.k, cfg.delta, cfg.seed, rounds, stop_first, lambda u: None)

        merged = _Budget(cfg.budget)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for out in pool.map(work, range(g.n)):
                merged.spend(out.counters.total())
                absorb(out)
                if stop_first and found:
                    break

    result.cycles = frozenset(found)
    result.found_at = found
    return result


def list_c2k(g: Graph, cfg: ListingConfig, threads: int = 1) -> set[Cycle]:
    """All 2k-cycles of ``g`` with probability at least ``1 - cfg.epsilon``.

    Never reports a non-cycle.  Raises :class:`BudgetExceeded` when
    ``cfg.budget`` is set and the work counter passes it.
    """
    return set(run_listing(g, cfg, threads=threads).cycles)


def list_colorful_cycles_through(gi: Graph, v: int, coloring: Mapping[int, int] | Iterable[int], k: int) -> set[Cycle]:
    """2k-cycles through ``v`` in ``gi`` whose vertices get pairwise distinct colors."""
    if k < 2:
        raise ValueError("k must be at least 2")
    col = coloring if isinstance(coloring, Mapping) else dict(enumerate(coloring))
    local = {u: set(gi.neighbors(u)) for u in range(gi.n) if gi.degree(u)}
    _two_core(local)
    if v not in local:
        return set()
    verts, ladj = _relabel(local)
    colors = np.array([[col[u]] for u in verts], dtype=np.uint8)
    if colors.size and (colors.max() >= 2 * k):
        raise ValueError(f"colors must lie in [0, {2 * k})")
    raw, _, _, _ = _LocalSearch(ladj, verts.index(v), k).run(colors)
    return {Cycle(verts[j] for j in loc) for loc in raw}


@dataclass
class DetectionResult:
    cycle: Cycle | None
    budget_exhausted: bool
    budget: int
    delta: int
    rounds: int
    counters: WorkCounters


DETECT_BUDGET_CONSTANT = 64


def detection_budget(m: int, n: int, k: int, constant: int = DETECT_BUDGET_CONSTANT) -> int:
    """``C * m^(2k/(k+1)) * (1 + log n)^(2k+2)`` elementary steps."""
    logn = math.log2(n) if n > 1 else 0.0
    return math.ceil(constant * max(m, 1) ** (2 * k / (k + 1)) * (1 + logn) ** (2 * k + 2))


def detect(g: Graph, k: int, seed: int = 0, epsilon: Fraction = DEFAULT_EPSILON,
           budget: int | None = None) -> DetectionResult:
    delta = delta_for(g.m, k)
    limit = detection_budget(g.m, g.n, k) if budget is None else budget
    cfg = ListingConfig(k=k, delta=delta, seed=seed, epsilon=epsilon, budget=limit)
    try:
        res = run_listing(g, cfg, stop_first=True)
    except BudgetExceeded:
        return DetectionResult(None, True, limit, delta, repetitions(g.n, k, cfg.epsilon), WorkCounters())
    first = min(res.cycles, key=lambda c: res.found_at[c]) if res.cycles else None
    return DetectionResult(first, False, limit, delta, res.rounds, res.counters)


def detect_c2k(g: Graph, k: int, seed: int = 0) -> Cycle | None:
    """A 2k-cycle of ``g``, or ``None`` (correct with probability >= 1 - 1e-9)."""
    return detect(g, k, seed).cycle


def list_c6(g: Graph, seed: int = 0, epsilon: Fraction = DEFAULT_EPSILON, budget: int | None = None) -> set[Cycle]:
    """Hexagon listing with the degree threshold ``ceil(m^(2/5))``."""
    cfg = ListingConfig(k=3, delta=max(1, ceil_pow_fraction(g.m, 2, 5)), seed=seed, epsilon=epsilon, budget=budget)
    return list_c2k(g, cfg)
