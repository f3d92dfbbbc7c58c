"""Dyadic degree buckets and the layered organization of capped k-walks.

The layered decomposition picks a degree class ``V_star`` that carries the most
capped k-walks and then carves layers ``X_1..X_k`` out of the low-degree
subgraph ``G'`` so that consecutive layers are degree-regular up to a factor
of two.  All maximizations are exact dynamic programs over walk counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Collection, Iterable, Sequence

from ._intmath import iroot_floor
from .errors import EmptyA, EmptyGraph, OutOfRange, check_u128
from .graph import DegreeOrder, Graph


def n_prime(n: int) -> int:
    """The power of two in ``[n, 2n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return 1 << (n - 1).bit_length()


def log_n_prime(n: int) -> int:
    return n_prime(n).bit_length() - 1


def num_buckets(n: int) -> int:
    """Number of non-zero buckets; at least one so that ``{1}`` exists."""
    return max(1, log_n_prime(n))


def dyadic_index(x: int, n: int) -> int:
    """Bucket of ``x``: 0 for ``{0}``, j for ``[2^(j-1), 2^j)``, last bucket closed."""
    if x < 0 or x > max(n_prime(n), 1):
        raise OutOfRange(f"{x} not in [0, {n_prime(n)}]")
    if x == 0:
        return 0
    return min(x.bit_length(), num_buckets(n))


def bucket_bounds(j: int, n: int) -> tuple[int, int]:
    """Inclusive ``(lo, hi)`` integer range of bucket ``j``."""
    if j == 0:
        return (0, 0)
    top = num_buckets(n)
    if not 1 <= j <= top:
        raise OutOfRange(f"bucket {j} not in [0, {top}]")
    if j == top:
        return (1 << (j - 1), 1 << j)
    return (1 << (j - 1), (1 << j) - 1)


def capped_walks_from(g: Graph, k: int, order: DegreeOrder) -> list[int]:
    """Per start vertex, the number of capped k-walks (DP over the lower set)."""
    rank = order.rank
    adj = g.adjacency
    out = [0] * g.n
    for x0 in range(g.n):
        cap = rank[x0]
        # counts[v] = walks from x0 currently ending at v
        counts = {x0: 1}
        for _ in range(k):
            nxt: dict[int, int] = {}
            for u, c in counts.items():
                for w in adj[u]:
                    if rank[w] < cap:
                        nxt[w] = nxt.get(w, 0) + c
            counts = nxt
            if not counts:
                break
        out[x0] = check_u128(sum(counts.values()))
    return out


def walks_from_set(g: Graph, k: int, starts: Collection[int], within: Collection[int]) -> int:
    """k-walks whose vertices all lie in ``within`` and whose first vertex is in ``starts``."""
    within = within if isinstance(within, (set, frozenset)) else set(within)
    adj = g.adjacency
    ends = {v: 1 for v in within}
    for _ in range(k):
        ends = {v: sum(ends[w] for w in adj[v] if w in within) for v in within}
    return check_u128(sum(ends[v] for v in starts if v in within))


def layered_walk_count(g: Graph, layers: Sequence[Collection[int]], last: Collection[int]) -> int:
    """Walks x_1..x_{k+1} with x_i in ``layers[i-1]`` and x_{k+1} in ``last``."""
    adj = g.adjacency
    last = last if isinstance(last, (set, frozenset)) else set(last)
    f = {v: 1 for v in last}
    for layer in reversed(layers):
        f = {v: sum(f.get(w, 0) for w in adj[v]) for v in layer}
    return check_u128(sum(f.values()))


@dataclass(frozen=True)
class LayerDecomposition:
    V_star: frozenset[int]
    d_star: int
    G_prime: Graph
    G_prime_vertices: frozenset[int]
    layers: tuple[frozenset[int], ...]
    degrees: tuple[int, ...]
    bucket_tuple: tuple[int, ...]
    star_bucket: int

    @property
    def k(self) -> int:
        return len(self.layers)


def _bucketize(counts: dict[int, int], n: int) -> dict[int, set[int]]:
    groups: dict[int, set[int]] = {}
    for v, c in counts.items():
        if c > 0:
            groups.setdefault(dyadic_index(c, n), set()).add(v)
    return groups


def layer_decompose(g: Graph, k: int, order: DegreeOrder) -> LayerDecomposition:
    if k < 2:
        raise ValueError("k must be at least 2")
    if g.m == 0:
        raise EmptyGraph("decomposition needs at least one edge")
    n = g.n
    adj = g.adjacency
    per_vertex = capped_walks_from(g, k, order)

    by_bucket: dict[int, int] = {}
    for v in range(n):
        deg = g.degree(v)
        if deg:
            j = dyadic_index(deg, n)
            by_bucket[j] = by_bucket.get(j, 0) + per_vertex[v]
    # ties -> smallest bucket index
    star_bucket = min(by_bucket, key=lambda j: (-by_bucket[j], j))
    d_star = 1 << star_bucket
    V_star = frozenset(v for v in range(n) if g.degree(v) and dyadic_index(g.degree(v), n) == star_bucket)
    gp_vertices = frozenset(v for v in range(n) if g.degree(v) <= d_star)
    G_prime = g.induced_subgraph(gp_vertices)

    best: tuple[int, tuple[int, ...], tuple[frozenset[int], ...]] | None = None

    def descend(level: int, prefix: tuple[int, ...], suffix: list[frozenset[int]]) -> None:
        # suffix holds W^(level+1) .. W^(k); choose bucket for W^(level)
        nonlocal best
        nxt = suffix[0]
        candidates = V_star if level == 1 else gp_vertices
        counts = {v: sum(1 for w in adj[v] if w in nxt) for v in candidates}
        for i_l, members in sorted(_bucketize(counts, n).items()):
            layer = frozenset(members)
            chain = [layer] + suffix
            tup = prefix + (i_l,)
            if level == 1:
                value = layered_walk_count(g, chain, gp_vertices)
                if best is None or value > best[0]:
                    best = (value, tup, tuple(chain))
            else:
                descend(level - 1, tup, chain)

    top_counts = {v: G_prime.degree(v) for v in gp_vertices}
    for i_k, members in sorted(_bucketize(top_counts, n).items()):
        descend(k - 1, (i_k,), [frozenset(members)])

    assert best is not None, "a graph with an edge always yields a walk"
    _, tup, layers = best
    # tup is (i_k, ..., i_1); degrees are stored as d_1..d_k
    degrees = tuple(1 << i for i in reversed(tup))
    return LayerDecomposition(
        V_star=V_star,
        d_star=d_star,
        G_prime=G_prime,
        G_prime_vertices=gp_vertices,
        layers=layers,
        degrees=degrees,
        bucket_tuple=tup,
        star_bucket=star_bucket,
    )


def count_layer_walks(g: Graph, d: LayerDecomposition, k: int | None = None) -> int:
    """Walks in ``X_1 x ... x X_k x V(G')``."""
    if k is not None and k != d.k:
        raise ValueError(f"decomposition has {d.k} layers, not {k}")
    return layered_walk_count(g, d.layers, d.G_prime_vertices)


def regularity_violations(g: Graph, d: LayerDecomposition) -> list[tuple[int, int, int]]:
    """``(layer index, vertex, neighbour count)`` for every vertex outside its window."""
    bad = []
    targets = list(d.layers[1:]) + [d.G_prime_vertices]
    for i, (layer, nxt, di) in enumerate(zip(d.layers, targets, d.degrees), start=1):
        for v in layer:
            c = sum(1 for w in g.neighbors(v) if w in nxt)
            if not (2 * c >= di and c <= di):
                bad.append((i, v, c))
    for v in d.V_star:
        deg = g.degree(v)
        if not (2 * deg >= d.d_star and deg <= d.d_star):
            bad.append((0, v, deg))
    if not d.layers[0] <= d.V_star:
        bad.append((1, -1, -1))
    return bad


@dataclass(frozen=True)
class ChainCheck:
    capped_walks: int
    star_walks: int
    layer_walks: int
    log_n_prime: int
    first_holds: bool
    second_holds: bool


def check_chain(g: Graph, d: LayerDecomposition, capped_walks: int) -> ChainCheck:
    """Both exact inequalities of the maximization chain.

    ``capped_walks`` should come from an independent count (the oracle).
    """
    L = log_n_prime(g.n)
    star = walks_from_set(g, d.k, d.V_star, d.G_prime_vertices)
    layer = count_layer_walks(g, d)
    return ChainCheck(
        capped_walks=capped_walks,
        star_walks=star,
        layer_walks=layer,
        log_n_prime=L,
        first_holds=capped_walks <= (1 + L) * star,
        second_holds=star <= max(L, 1) ** d.k * layer,
    )


def keylem_ratio(g: Graph, A: Iterable[int], d: int, k: int) -> Fraction:
    """``d^2 |B| / (|A| * floor(m^(2/(k+1))))`` with ``B = {v : |N_A(v)| in [d/2, d]}``.

    The floor keeps the ratio rational; an edgeless graph uses denominator
    ``|A|`` (floor clamped to 1).
    """
    A = frozenset(A)
    if not A:
        raise EmptyA("A must be non-empty")
    B = [v for v in range(g.n) if _in_window(sum(1 for w in g.neighbors(v) if w in A), d)]
    scale = max(1, iroot_floor(g.m * g.m, k + 1))
    return Fraction(d * d * len(B), len(A) * scale)


def _in_window(count: int, d: int) -> bool:
    return 2 * count >= d and count <= d
