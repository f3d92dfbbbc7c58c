"""Immutable simple undirected graphs, the degree order, and subgraph helpers."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Collection, Iterable, Iterator, Union

from .errors import DuplicateEdge, ParseError, SelfLoop, SourceNotAllowed

Edge = tuple[int, int]
VertexFilter = Union[Callable[[int], bool], Collection[int]]


class Graph:
    """Simple undirected graph on vertex ids ``0..n-1``.

    Adjacency lists are ascending tuples.  Subgraphs produced by this module
    keep the parent's vertex id space, so ``n`` never shrinks.
    """

    __slots__ = ("_n", "_adj", "_m", "_adjset")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        buckets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside [0, {n})")
            if v in buckets[u]:
                raise DuplicateEdge(f"duplicate edge ({min(u, v)}, {max(u, v)})")
            buckets[u].add(v)
            buckets[v].add(u)
            m += 1
        self._n = n
        self._m = m
        self._adj = tuple(tuple(sorted(b)) for b in buckets)
        self._adjset = tuple(frozenset(b) for b in buckets)

    @classmethod
    def _from_adjacency(cls, adj: list[list[int]]) -> "Graph":
        # trusted constructor: adj already symmetric, loop-free, duplicate-free
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(tuple(sorted(a)) for a in adj)
        g._adjset = tuple(frozenset(a) for a in g._adj)
        g._m = sum(len(a) for a in g._adj) // 2
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjset[u]

    def edges(self) -> Iterator[Edge]:
        """Edges as ``(u, v)`` with ``u < v`` in ascending order."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def induced_subgraph(self, keep: Collection[int]) -> "Graph":
        keep = set(keep)
        adj = [[w for w in self._adj[u] if w in keep] if u in keep else [] for u in range(self._n)]
        return Graph._from_adjacency(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def _is_int_token(tok: str) -> bool:
    return tok.isdigit()


def load_edge_list(text: Union[bytes, str]) -> Graph:
    """Parse a whitespace-separated edge list.

    Lines starting with ``#`` and blank lines are ignored.  The first data line
    is taken as an ``n m`` header when more lines follow, its second number
    equals their count, and its first number exceeds every id on them.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not utf-8: {exc}") from None
    rows: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(_is_int_token(p) for p in parts):
            raise ParseError(f"line {lineno}: expected two non-negative integers, got {raw!r}")
        rows.append((lineno, int(parts[0]), int(parts[1])))

    n_header = None
    if rows:
        _, h0, h1 = rows[0]
        rest = rows[1:]
        max_rest = max((max(u, v) for _, u, v in rest), default=-1)
        if rest and h1 == len(rest) and h0 > max_rest:
            n_header = h0
            rows = rest

    max_id = max((max(u, v) for _, u, v in rows), default=-1)
    n = n_header if n_header is not None else max_id + 1
    seen: set[Edge] = set()
    edges: list[Edge] = []
    for lineno, u, v in rows:
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def save_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


@dataclass(frozen=True)
class DegreeOrder:
    """Total order: higher degree ranks higher, ties broken by ascending id.

    ``rank[v]`` is the position of ``v`` (0 = lowest); ``by_rank[i]`` inverts it.
    """

    rank: tuple[int, ...]
    by_rank: tuple[int, ...] = field(repr=False)

    def succ(self, u: int, v: int) -> bool:
        """True iff ``u`` is above ``v``."""
        return self.rank[u] > self.rank[v]

    def maximum(self, vertices: Iterable[int]) -> int:
        return max(vertices, key=self.rank.__getitem__)


def degree_order(g: Graph) -> DegreeOrder:
    by_rank = tuple(sorted(range(g.n), key=lambda v: (g.degree(v), v)))
    rank = [0] * g.n
    for pos, v in enumerate(by_rank):
        rank[v] = pos
    return DegreeOrder(rank=tuple(rank), by_rank=by_rank)


def _as_predicate(allowed: VertexFilter | None) -> Callable[[int], bool]:
    if allowed is None:
        return lambda v: True
    if callable(allowed):
        return allowed
    allowed_set = allowed if isinstance(allowed, (set, frozenset)) else set(allowed)
    return allowed_set.__contains__


def bfs_distances(g: Graph, source: int, allowed: VertexFilter | None = None,
                  max_depth: int | None = None) -> dict[int, int]:
    """Hop distances from ``source`` inside the subgraph induced by ``allowed``."""
    ok = _as_predicate(allowed)
    dist = {source: 0}
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        if max_depth is not None and du >= max_depth:
            continue
        for w in adj[u]:
            if w not in dist and ok(w):
                dist[w] = du + 1
                queue.append(w)
    return dist


def bfs_edge_set(g: Graph, source: int, k: int, ok: Callable[[int], bool]) -> tuple[dict[int, int], list[Edge]]:
    """Edges with an endpoint at allowed-distance <= k-1 from ``source``.

    Returns the distance map (truncated at depth k) and the edges as ``(u, w)``
    where ``u`` is the endpoint nearer to the source.  Each undirected edge is
    reported once.
    """
    dist = bfs_distances(g, source, ok, max_depth=k)
    adj = g.adjacency
    edges: list[Edge] = []
    for u, du in dist.items():
        if du > k - 1:
            continue
        for w in adj[u]:
            dw = dist.get(w)
            if dw is None:
                # w is either disallowed or beyond depth k; allowed neighbours of
                # a depth k-1 vertex always land at depth <= k
                continue
            if dw > du or (dw == du and u < w):
                edges.append((u, w))
    return dist, edges


def restricted_bfs_subgraph(g: Graph, source: int, k: int, allowed: VertexFilter | None = None) -> Graph:
    """Subgraph of the allowed-induced graph spanned by the k-step BFS from ``source``.

    An edge is kept iff one of its endpoints lies at distance at most ``k - 1``
    from ``source``, distances measured inside the allowed-induced subgraph.
    """
    if k < 1:
        raise ValueError("depth k must be positive")
    ok = _as_predicate(allowed)
    if not ok(source):
        raise SourceNotAllowed(f"source {source} is not an allowed vertex")
    _, edges = bfs_edge_set(g, source, k, ok)
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    return Graph._from_adjacency(adj)


@dataclass(frozen=True)
class VertexSetPair:
    A: frozenset[int]
    B: frozenset[int]
    e_AB: int


def edges_between(g: Graph, A: Collection[int], B: Collection[int]) -> int:
    """``e(A, B)``: undirected edges with one endpoint in A and the other in B.

    Sets may overlap; an edge inside ``A & B`` is counted once.
    """
    A = A if isinstance(A, (set, frozenset)) else set(A)
    B = B if isinstance(B, (set, frozenset)) else set(B)
    count = 0
    for u, v in g.edges():
        if (u in A and v in B) or (v in A and u in B):
            count += 1
    return count


def vertex_set_pair(g: Graph, A: Iterable[int], B: Iterable[int]) -> VertexSetPair:
    A, B = frozenset(A), frozenset(B)
    return VertexSetPair(A, B, edges_between(g, A, B))


def random_bipartite_split(g: Graph, pair: VertexSetPair, seed: int) -> tuple[frozenset[int], frozenset[int], Graph]:
    """Split overlapping ``A``/``B`` into disjoint sides by seeded coin flips.

    Vertices of ``A - B`` go left, ``B - A`` go right, shared vertices flip a
    fair coin (in ascending id order).  ``H`` keeps exactly the edges between
    the two sides.
    """
    rng = random.Random(seed)
    shared = sorted(pair.A & pair.B)
    left = set(pair.A - pair.B)
    right = set(pair.B - pair.A)
    for c in shared:
        if rng.random() < 0.5:
            left.add(c)
        else:
            right.add(c)
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges():
        if (u in left and v in right) or (v in left and u in right):
            adj[u].append(v)
            adj[v].append(u)
    return frozenset(left), frozenset(right), Graph._from_adjacency(adj)
