"""Simple undirected graphs and the basic parameters used throughout the package.

Vertices are the integers ``0..order-1``. A :class:`Graph` is immutable; every
"modifying" helper returns a new instance. Adjacency is kept as one bitmask per
vertex, which is why the order is capped at :data:`MAX_ORDER`.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

MAX_ORDER = 32

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for invalid graph construction or an operation outside its domain."""


class _Acyclic:
    """Sentinel girth of a forest; compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ACYCLIC"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("ACYCLIC")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True


ACYCLIC = _Acyclic()


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    order: int
    edges: frozenset = field(default_factory=frozenset)

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = ()):
        if not 1 <= order <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {order}")
        normed = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
            edge = _norm(u, v)
            if edge in normed:
                raise GraphError(f"parallel edge {edge}")
            normed.add(edge)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(normed))

    def __repr__(self) -> str:
        return f"Graph({self.order}, {self.edge_list()})"

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        rows = [0] * self.order
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adjacency)

    @property
    def size(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        row = self.adjacency[v]
        return [u for u in range(self.order) if row >> u & 1]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> Graph:
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) already present")
        return Graph(self.order, self.edges | {_norm(u, v)})

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        return Graph(self.order, self.edges - {_norm(u, v)})

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in combinations(range(self.order), 2) if not self.has_edge(u, v)]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph(self.order, ((perm[u], perm[v]) for u, v in self.edges))


# Named small graphs.

def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices, center 0."""
    return Graph(n, ((0, i) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


# Degrees.

def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees, reverse=True))


def max_degree(g: Graph) -> int:
    return max(g.degrees)


def second_max_degree(g: Graph) -> int:
    """Second entry of the non-increasing degree sequence (equals Δ when Δ repeats)."""
    seq = degree_sequence(g)
    return seq[1] if len(seq) > 1 else 0


def degree_counts(g: Graph) -> dict[int, int]:
    """``n_i``: number of vertices of each degree."""
    return dict(sorted(Counter(g.degrees).items()))


def edge_degree_distribution(g: Graph) -> dict[tuple[int, int], int]:
    """``m_{i,j}`` keyed by ``(i, j)`` with ``i <= j``."""
    deg = g.degrees
    counts = Counter(_norm(deg[u], deg[v]) for u, v in g.edges)
    return dict(sorted(counts.items()))


def pendent_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v, d in enumerate(g.degrees) if d == 1)


def branching_number(g: Graph) -> int:
    return sum(1 for d in g.degrees if d >= 3)


# Distances and cycles.

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        row = adj[u]
        while row:
            low = row & -row
            w = low.bit_length() - 1
            row ^= low
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


def is_tree(g: Graph) -> bool:
    return g.size == g.order - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.size == g.order and is_connected(g)


def diameter(g: Graph) -> int:
    best = 0
    for v in range(g.order):
        dist = bfs_distances(g, v)
        if min(dist) < 0:
            raise GraphError("diameter is undefined for a disconnected graph")
        best = max(best, max(dist))
    return best


def girth(g: Graph):
    """Length of a shortest cycle, or :data:`ACYCLIC` for a forest."""
    best = None
    adj = g.adjacency
    for s in range(g.order):
        dist = [-1] * g.order
        parent = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in range(g.order):
                if not adj[u] >> w & 1:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return ACYCLIC if best is None else best


# Matchings.

def matching_number(g: Graph) -> int:
    """Size of a maximum matching (Edmonds' blossom algorithm)."""
    return len(maximum_matching(g))


def maximum_matching(g: Graph) -> list[Edge]:
    n = g.order
    adj = [g.neighbors(v) for v in range(n)]
    match = [-1] * n

    # Greedy start; the augmenting phase fixes any suboptimal choice.
    for u, v in g.edge_list():
        if match[u] < 0 and match[v] < 0:
            match[u], match[v] = v, u

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] >= 0:
            continue
        v, parent = find_augmenting(root)
        while v >= 0:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv
    return sorted(_norm(u, v) for u, v in enumerate(match) if v > u)


def matching_number_bruteforce(g: Graph) -> int:
    """Largest pairwise-disjoint edge subset by exhaustive search (small graphs only)."""
    edges = g.edge_list()
    best = 0

    def extend(start: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - start) <= best:
            return
        for k in range(start, len(edges)):
            u, v = edges[k]
            bits = (1 << u) | (1 << v)
            if not used & bits:
                extend(k + 1, used | bits, size + 1)

    extend(0, 0, 0)
    return best


# Transformations.

def edge_lifting(g: Graph, u: int, v: int) -> Graph:
    """Move every neighbor of ``u`` other than ``v`` onto ``v``; ``u`` becomes pendent."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if g.degree(u) < 2 or g.degree(v) < 2:
        raise GraphError(f"({u}, {v}) is a pendent edge")
    moved = [w for w in g.neighbors(u) if w != v]
    clash = [w for w in moved if g.has_edge(v, w)]
    if clash:
        raise GraphError(f"lifting ({u}, {v}) would duplicate edges to {clash}")
    edges = set(g.edges)
    for w in moved:
        edges.discard(_norm(u, w))
        edges.add(_norm(v, w))
    return Graph(g.order, edges)
