"""Named graphs and seeded random families used by tests, acceptance and bench."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(L: int, R: int) -> Graph:
    """K_{L,R} with left side ``0..L-1`` and right side ``L..L+R-1``."""
    return Graph(L + R, ((a, L + b) for a in range(L) for b in range(R)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """Center 0 joined to leaves ``1..leaves``."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def heawood_graph() -> Graph:
    # LCF notation [5, -5]^7
    n = 14
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i in range(n):
        j = (i + (5 if i % 2 == 0 else -5)) % n
        edges.add(tuple(sorted((i, j))))
    return Graph(n, sorted(edges))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def named_graphs() -> dict[str, Graph]:
    return {
        "K4": complete_graph(4),
        "K33": complete_bipartite(3, 3),
        "C6": cycle_graph(6),
        "C7": cycle_graph(7),
        "Heawood": heawood_graph(),
        "Petersen": petersen_graph(),
    }


def gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with ``n`` vertices and ``m`` edges."""
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f"m={m} exceeds {total} possible edges")
    rng = random.Random(seed)
    if 2 * m > total:
        chosen = rng.sample(list(combinations(range(n), 2)), m)
        return Graph(n, chosen)
    seen: set[tuple[int, int]] = set()
    while len(seen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            seen.add((min(u, v), max(u, v)))
    return Graph(n, sorted(seen))


def bipartite_gnp(L: int, R: int, p: float, seed: int) -> Graph:
    """Random bipartite graph; left side ``0..L-1``, right ``L..L+R-1``."""
    rng = random.Random(seed)
    edges = [(a, L + b) for a in range(L) for b in range(R) if rng.random() < p]
    return Graph(L + R, edges)


def bipartite_gnm(L: int, R: int, m: int, seed: int) -> Graph:
    if m > L * R:
        raise ValueError(f"m={m} exceeds {L * R} possible edges")
    rng = random.Random(seed)
    picks = rng.sample(range(L * R), m)
    return Graph(L + R, sorted((i // R, L + i % R) for i in picks))


def random_corpus(count: int, seed: int, n_range: tuple[int, int] = (6, 40),
                  max_m: int = 120) -> list[Graph]:
    """Seeded corpus of small sparse graphs for oracle comparisons.

    Each instance draws ``n`` uniformly from ``n_range`` and ``m`` uniformly
    from ``[n - 1, min(max_m, 3n, n(n-1)/2)]``.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        hi = min(max_m, 3 * n, n * (n - 1) // 2)
        m = rng.randint(min(n - 1, hi), hi)
        out.append(gnm(n, m, rng.getrandbits(32)))
    return out


def bipartite_corpus(count: int, seed: int, side_range: tuple[int, int] = (3, 12)) -> list[tuple[Graph, frozenset[int], frozenset[int]]]:
    """Seeded random bipartite instances with their two sides."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        L = rng.randint(*side_range)
        R = rng.randint(*side_range)
        p = rng.choice([0.2, 0.35, 0.5, 0.7, 0.9])
        g = bipartite_gnp(L, R, p, rng.getrandbits(32))
        out.append((g, frozenset(range(L)), frozenset(range(L, L + R))))
    return out
