"""Brute-force ground truth for cycles, walks and bipartite paths.

Everything here is exhaustive and meant for small instances; it is the
reference the fast routines are tested against, so it shares no code with
them beyond the graph container.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Iterable, Sequence

from .errors import BudgetExceeded, SetsOverlap, check_u128
from .graph import DegreeOrder, Graph


class Cycle(tuple):
    """A simple cycle stored in canonical vertex order.

    The canonical order is the lexicographic minimum over all rotations and
    reflections, so two ``Cycle`` values compare equal iff they are the same
    cycle subgraph.  Construct via :meth:`from_walk`.
    """

    __slots__ = ()

    @classmethod
    def from_walk(cls, vertices: Sequence[int]) -> "Cycle":
        return cls(canonical_cycle(vertices))

    @property
    def length(self) -> int:
        return len(self)

    def edges(self) -> list[tuple[int, int]]:
        n = len(self)
        return [(self[i], self[(i + 1) % n]) for i in range(n)]

    def is_valid_in(self, g: Graph) -> bool:
        if len(set(self)) != len(self) or len(self) < 3:
            return False
        return all(0 <= u < g.n and 0 <= v < g.n and g.has_edge(u, v) for u, v in self.edges())


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(vertices)
    n = len(seq)
    i = seq.index(min(seq))
    if seq[(i + 1) % n] < seq[i - 1]:
        return seq[i:] + seq[:i]
    rev = seq[::-1]
    j = n - 1 - i
    return rev[j:] + rev[:j]


def enumerate_cycles(g: Graph, k: int) -> set[Cycle]:
    """All 2k-cycles of ``g``, anchored at their minimum vertex."""
    if k < 2:
        raise ValueError("k must be at least 2")
    length = 2 * k
    adj = g.adjacency
    found: set[Cycle] = set()
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(u: int) -> None:
            if len(path) == length:
                if g.has_edge(u, s) and path[1] < path[-1]:
                    found.add(Cycle(path))
                return
            for w in adj[u]:
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    return found


def enumerate_cycles_edge_anchored(g: Graph, k: int) -> set[Cycle]:
    """Second enumeration order: close a (2k-1)-path across each edge."""
    if k < 2:
        raise ValueError("k must be at least 2")
    length = 2 * k
    adj = g.adjacency
    found: set[Cycle] = set()
    for a, b in g.edges():
        # simple paths b -> ... of 2k-1 vertices avoiding a, closed by an edge to a
        stack = [(b,)]
        while stack:
            path = stack.pop()
            u = path[-1]
            if len(path) == length - 1:
                if g.has_edge(u, a):
                    found.add(Cycle.from_walk(path + (a,)))
                continue
            for w in adj[u]:
                if w != a and w not in path:
                    stack.append(path + (w,))
    return found


def count_k_walks(g: Graph, k: int) -> int:
    """Number of walks with k edges (ordered vertex sequences x_0..x_k)."""
    if k < 1:
        raise ValueError("k must be positive")
    ends = [1] * g.n
    adj = g.adjacency
    for _ in range(k):
        ends = [check_u128(sum(ends[w] for w in adj[v])) for v in range(g.n)]
    return check_u128(sum(ends))


def count_capped_k_walks(g: Graph, k: int, order: DegreeOrder, starts: Iterable[int] | None = None) -> int:
    """Walks x_0..x_k with x_0 above every later vertex, by explicit extension.

    ``starts`` restricts the first vertex.
    """
    if k < 1:
        raise ValueError("k must be positive")
    rank = order.rank
    adj = g.adjacency
    total = 0
    for x0 in (range(g.n) if starts is None else starts):
        cap = rank[x0]
        frontier = [x0]
        for _ in range(k):
            frontier = [w for u in frontier for w in adj[u] if rank[w] < cap]
        total += len(frontier)
        check_u128(total)
    return total


def _disjoint_sets(A: Collection[int], B: Collection[int]) -> tuple[frozenset[int], frozenset[int]]:
    A, B = frozenset(A), frozenset(B)
    if A & B:
        raise SetsOverlap(f"sets share vertices {sorted(A & B)[:5]}")
    return A, B


def count_2paths(g: Graph, A: Collection[int], B: Collection[int]) -> int:
    """Ordered triples (a1, b, a2), a1 != a2, forming a path A-B-A."""
    A, B = _disjoint_sets(A, B)
    count = 0
    for b in B:
        nbrs = [a for a in g.neighbors(b) if a in A]
        for a1 in nbrs:
            for a2 in nbrs:
                if a1 != a2:
                    count += 1
    return check_u128(count)


DEFAULT_PATH_BUDGET = 50_000_000


def count_4paths(g: Graph, A: Collection[int], B: Collection[int], budget: int = DEFAULT_PATH_BUDGET) -> int:
    """Ordered 5-tuples (a1, b1, a2, b2, a3) of distinct vertices forming a path.

    ``budget`` caps the number of extension steps taken.
    """
    A, B = _disjoint_sets(A, B)
    nA = {v: [w for w in g.neighbors(v) if w in A] for v in B}
    nB = {v: [w for w in g.neighbors(v) if w in B] for v in A}
    steps = 0
    count = 0
    for a1 in A:
        for b1 in nB[a1]:
            for a2 in nA[b1]:
                if a2 == a1:
                    continue
                for b2 in nB[a2]:
                    if b2 == b1:
                        continue
                    row = nA[b2]
                    steps += len(row) + 1
                    if steps > budget:
                        raise BudgetExceeded(steps, budget)
                    for a3 in row:
                        if a3 != a1 and a3 != a2:
                            count += 1
    return check_u128(count)


@dataclass(frozen=True)
class CompleteBipartiteCounts:
    two_paths: int
    four_paths: int
    hexagons: int


def complete_bipartite_counts(L: int, R: int) -> CompleteBipartiteCounts:
    """Closed-form path and hexagon counts of K_{L,R}; paths start on the L side."""
    if L < 1 or R < 1:
        raise ValueError("both sides must be non-empty")
    two = R * L * (L - 1)
    four = L * R * (L - 1) * (R - 1) * (L - 2)
    # a1 b1 a2 b2 a3 b3 sequences, each hexagon seen from 3 A-starts x 2 directions
    hexagons = L * (L - 1) * (L - 2) * R * (R - 1) * (R - 2) // 6
    return CompleteBipartiteCounts(two, max(four, 0), max(hexagons, 0))
