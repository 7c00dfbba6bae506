"""Constructors for the named extremal graph families.

Each constructor checks its parameter range, builds the graph, and re-derives
the defining parameters (order, diameter, girth, matching number, ...) from
the result. A failed self-check raises :class:`FamilyError`; this matters for
the diameter families, where the extra-edge placement is a reconstruction.

Labeling conventions: for the diameter families the path is ``v_0..v_d`` on
vertices ``0..d`` and the pendants ``u_1, u_2, ...`` follow on ``d+1, d+2, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .graph import (
    ACYCLIC,
    Graph,
    GraphError,
    branching_number,
    complete_graph,
    cycle_graph,
    degree_sequence,
    diameter,
    girth,
    is_tree,
    is_unicyclic,
    matching_number,
    max_degree,
    path_graph,
    pendent_vertices,
    second_max_degree,
    star_graph,
)


class FamilyError(GraphError):
    """Parameters outside a family's range, or a construction failing its self-check."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyError(message)


def _check(g: Graph, **expected) -> Graph:
    measured = {
        "order": lambda: g.order,
        "tree": lambda: is_tree(g),
        "unicyclic": lambda: is_unicyclic(g),
        "diameter": lambda: diameter(g),
        "girth": lambda: girth(g),
        "matching": lambda: matching_number(g),
        "pendents": lambda: len(pendent_vertices(g)),
        "branching": lambda: branching_number(g),
        "max_degree": lambda: max_degree(g),
        "second_max_degree": lambda: second_max_degree(g),
    }
    for key, want in expected.items():
        got = measured[key]()
        if got != want:
            raise FamilyError(f"self-check failed: {key} is {got}, expected {want} for {g!r}")
    return g


# Basic graphs.

def make_path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return path_graph(n)


def make_star(n: int) -> Graph:
    _require(n >= 1, "star needs n >= 1")
    return star_graph(n)


def make_cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return cycle_graph(n)


def make_star_subdivided(n: int) -> Graph:
    """Star on ``n - 1`` vertices with one edge subdivided."""
    _require(n >= 4, "subdivided star needs n >= 4")
    edges = [(0, i) for i in range(1, n - 1)] + [(n - 2, n - 1)]
    return _check(Graph(n, edges), tree=True, order=n, max_degree=n - 2)


# Trees and unicyclic graphs with given diameter.

def _t_edges(n: int, d: int, i: int) -> list[tuple[int, int]]:
    edges = [(k, k + 1) for k in range(d)]
    edges += [(i, u) for u in range(d + 1, n)]
    return edges


def make_T(n: int, d: int, i: int) -> Graph:
    """Path ``v_0..v_d`` with ``n - d - 1`` pendent edges at ``v_i``."""
    _require(2 <= d <= n - 1, f"T needs 2 <= d <= n-1, got n={n}, d={d}")
    _require(1 <= i <= d - 1, f"T needs 1 <= i <= d-1, got i={i}")
    return _check(Graph(n, _t_edges(n, d, i)), tree=True, order=n, diameter=d)


def make_U(n: int, d: int, i: int) -> Graph:
    """``T(n, d, i)`` plus an edge from its last pendant to ``v_{i+2}`` (a 4-cycle)."""
    _require(3 <= d <= n - 2, f"U needs 3 <= d <= n-2, got n={n}, d={d}")
    _require(1 <= i <= d - 2, f"U needs 1 <= i <= d-2, got i={i}")
    edges = _t_edges(n, d, i) + [(n - 1, i + 2)]
    return _check(Graph(n, edges), unicyclic=True, order=n, diameter=d, girth=4)


def make_R(n: int, d: int, i: int) -> Graph:
    """``T(n, d, i)`` plus an edge from its last pendant to ``v_{i+1}`` (a triangle)."""
    _require(2 <= d <= n - 2, f"R needs 2 <= d <= n-2, got n={n}, d={d}")
    _require(1 <= i <= d - 1, f"R needs 1 <= i <= d-1, got i={i}")
    edges = _t_edges(n, d, i) + [(n - 1, i + 1)]
    return _check(Graph(n, edges), unicyclic=True, order=n, diameter=d, girth=3)


def make_W(n: int, d: int, i: int) -> Graph:
    """``T(n, d, i)`` plus an edge joining its last two pendants (a triangle at ``v_i``)."""
    _require(2 <= d <= n - 3, f"W needs 2 <= d <= n-3, got n={n}, d={d}")
    _require(1 <= i <= d - 1, f"W needs 1 <= i <= d-1, got i={i}")
    edges = _t_edges(n, d, i) + [(n - 2, n - 1)]
    return _check(Graph(n, edges), unicyclic=True, order=n, diameter=d, girth=3)


# Matching number, pendent vertices, branching number.

def make_M(n: int, beta: int) -> Graph:
    """Star on ``n - beta + 1`` vertices with ``beta - 1`` of its edges subdivided."""
    _require(n >= 2 and 1 <= beta <= n // 2, f"M needs 1 <= beta <= n/2, got n={n}, beta={beta}")
    edges = []
    nxt = 1
    for _ in range(beta - 1):
        edges += [(0, nxt), (nxt, nxt + 1)]
        nxt += 2
    edges += [(0, v) for v in range(nxt, n)]
    return _check(Graph(n, edges), tree=True, order=n, matching=beta)


def make_broom(n: int, p: int) -> Graph:
    """Broom: ``p - 1`` leaves on a center that also starts a path of length ``n - p``."""
    _require(2 <= p <= n - 1, f"broom needs 2 <= p <= n-1, got n={n}, p={p}")
    edges = [(0, v) for v in range(1, p)]
    edges += [(0 if v == p else v - 1, v) for v in range(p, n)]
    return _check(Graph(n, edges), tree=True, order=n, pendents=p)


def make_hmin(n: int, b: int) -> Graph:
    """A tree with degree sequence ``3^b 2^(n-2b-2) 1^(b+2)`` and minimum ``SO1``.

    The degree-3 vertices form a path, and every degree-2 vertex sits on one
    pendent path, so no edge joins a degree-2 vertex to two branching vertices.
    """
    _require(1 <= b and 2 * b + 2 <= n, f"hmin needs 1 <= b <= (n-2)/2, got n={n}, b={b}")
    edges = [(k, k + 1) for k in range(b - 1)]  # branching spine 0..b-1
    nxt = b
    leaves_at = [1] * b
    leaves_at[0] += 1
    leaves_at[-1] += 1
    if b == 1:
        leaves_at = [3]
    # First leg of vertex 0 becomes the pendent path holding all degree-2 vertices.
    twos = n - 2 * b - 2
    for c, count in enumerate(leaves_at):
        for leg in range(count):
            length = twos + 1 if (c == 0 and leg == 0) else 1
            prev = c
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    g = Graph(n, edges)
    expected = tuple([3] * b + [2] * twos + [1] * (b + 2))
    _require(degree_sequence(g) == expected, f"hmin construction produced {degree_sequence(g)}")
    return _check(g, tree=True, order=n, branching=b)


def make_hmax(n: int, b: int) -> Graph:
    """A tree with degree sequence ``(n-2b+1) 3^(b-1) 1^(n-b)``: big center, ``b-1`` forks.

    Forks hang off the center while it has room and off earlier forks after
    that (only when ``n < 3b - 2``), breadth-first.
    """
    _require(1 <= b and 2 * b + 2 <= n, f"hmax needs 1 <= b <= (n-2)/2, got n={n}, b={b}")
    big = n - 2 * b + 1
    room = [big] + [2] * (b - 1)   # free slots after the edge to the parent
    edges = []
    parent = 0
    for v in range(1, n):
        while room[parent] == 0:
            parent += 1
        edges.append((parent, v))
        room[parent] -= 1
    g = Graph(n, edges)
    expected = tuple([big] + [3] * (b - 1) + [1] * (n - b))
    _require(degree_sequence(g) == expected, f"hmax construction produced {degree_sequence(g)}")
    return _check(g, tree=True, order=n, branching=b)


def has_hmin_degree_sequence(g: Graph, b: int) -> bool:
    n = g.order
    return degree_sequence(g) == tuple([3] * b + [2] * (n - 2 * b - 2) + [1] * (b + 2))


def has_hmax_degree_sequence(g: Graph, b: int) -> bool:
    n = g.order
    return degree_sequence(g) == tuple([n - 2 * b + 1] + [3] * (b - 1) + [1] * (n - b))


# Maximum degree families.

def _attach_legs(edges: list, center: int, legs: Sequence[int], nxt: int) -> int:
    for length in legs:
        prev = center
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt


def make_starlike(n: int, legs: Sequence[int]) -> Graph:
    """Center 0 with ``len(legs)`` pendent paths of the given lengths."""
    _require(len(legs) >= 3, "a starlike tree needs at least 3 legs")
    _require(all(x >= 1 for x in legs), "leg lengths must be >= 1")
    _require(sum(legs) == n - 1, f"leg lengths must sum to n-1 = {n - 1}")
    edges: list = []
    _attach_legs(edges, 0, legs, 1)
    return _check(Graph(n, edges), tree=True, order=n, branching=1, max_degree=len(legs))


def make_double_starlike(n: int, delta: int, delta2: int, legs_a: Sequence[int], legs_b: Sequence[int]) -> Graph:
    """Two adjacent centers of degrees ``delta`` and ``delta2``, each carrying pendent paths."""
    _require(delta >= delta2 >= 3, f"need delta >= delta2 >= 3, got {delta}, {delta2}")
    _require(len(legs_a) == delta - 1 and len(legs_b) == delta2 - 1, "leg counts must be delta-1 and delta2-1")
    _require(all(x >= 1 for x in list(legs_a) + list(legs_b)), "leg lengths must be >= 1")
    _require(2 + sum(legs_a) + sum(legs_b) == n, "leg lengths do not add up to n")
    edges: list = [(0, 1)]
    nxt = _attach_legs(edges, 0, legs_a, 2)
    _attach_legs(edges, 1, legs_b, nxt)
    return _check(Graph(n, edges), tree=True, order=n, branching=2, max_degree=delta, second_max_degree=delta2)


def make_A(n: int, g: int, delta: int, legs: Sequence[int]) -> Graph:
    """Starlike tree whose first leg ends on a vertex of a ``g``-cycle.

    ``legs`` holds the ``delta`` leg lengths of the starlike part; ``legs[0]`` is
    the distance from its center to the cycle.
    """
    _require(g >= 3 and delta >= 3, "A needs g >= 3 and delta >= 3")
    _require(len(legs) == delta and all(x >= 1 for x in legs), "A needs delta legs of length >= 1")
    _require(sum(legs) == n - g, f"leg lengths must sum to n-g = {n - g}")
    edges = [(k, (k + 1) % g) for k in range(g)]
    center = g
    # First leg runs from the center down to cycle vertex 0.
    nxt = g + 1
    prev = center
    for _ in range(legs[0] - 1):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    edges.append((prev, 0))
    _attach_legs(edges, center, legs[1:], nxt)
    return _check(Graph(n, edges), unicyclic=True, order=n, girth=g, max_degree=delta)


def make_B(n: int, g: int, delta: int, legs: Sequence[int] | None = None) -> Graph:
    """``g``-cycle with ``delta - 2`` pendent paths at vertex 0."""
    _require(g >= 3 and delta >= 3, "B needs g >= 3 and delta >= 3")
    if legs is None:
        _require(n - g >= delta - 2, f"B needs n - g >= delta - 2, got n={n}, g={g}, delta={delta}")
        legs = [1] * (delta - 3) + [n - g - (delta - 3)]
    _require(len(legs) == delta - 2 and all(x >= 1 for x in legs), "B needs delta-2 legs of length >= 1")
    _require(sum(legs) == n - g, f"leg lengths must sum to n-g = {n - g}")
    edges = [(k, (k + 1) % g) for k in range(g)]
    _attach_legs(edges, 0, legs, g)
    return _check(Graph(n, edges), unicyclic=True, order=n, girth=g, max_degree=delta)


def make_complete_split(m: int, t: int) -> Graph:
    """Clique on vertices ``0..t-1`` joined to the independent set ``t..m-1``."""
    _require(1 <= t <= m, f"complete split graph needs 1 <= t <= m, got m={m}, t={t}")
    edges = [(a, b) for a in range(t) for b in range(a + 1, m)]
    return Graph(m, edges)


def make_H(n: int, k: int, t: int) -> Graph:
    """A star center with ``k`` leaves, joined to every vertex of ``CS(n-k-1, t)``."""
    _require(1 <= k <= n - 3, f"H needs 1 <= k <= n-3, got n={n}, k={k}")
    _require(1 <= t <= n - k - 2, f"H needs 1 <= t <= n-k-2, got t={t}")
    m = n - k - 1
    split = make_complete_split(m, t)
    edges = [(a + 1, b + 1) for a, b in split.edges]
    edges += [(0, v) for v in range(1, n)]
    g = Graph(n, edges)
    _check(g, order=n, pendents=k, max_degree=n - 1, second_max_degree=n - k - 1)
    _require(g.degrees.count(n - 1) == 1, "H must have a unique vertex of degree n-1")
    return g


@dataclass(frozen=True)
class FamilySpec:
    """A family id, its constructor, and the parameter names it takes."""

    id: str
    build: Callable[..., Graph]
    params: tuple[str, ...]
    list_params: tuple[str, ...] = field(default=())


FAMILIES: dict[str, FamilySpec] = {
    spec.id: spec
    for spec in (
        FamilySpec("PATH", make_path, ("n",)),
        FamilySpec("STAR", make_star, ("n",)),
        FamilySpec("CYCLE", make_cycle, ("n",)),
        FamilySpec("STAR_SUBDIV", make_star_subdivided, ("n",)),
        FamilySpec("T_ndi", make_T, ("n", "d", "i")),
        FamilySpec("U_ndi", make_U, ("n", "d", "i")),
        FamilySpec("R_ndi", make_R, ("n", "d", "i")),
        FamilySpec("W_ndi", make_W, ("n", "d", "i")),
        FamilySpec("M_nbeta", make_M, ("n", "beta")),
        FamilySpec("BROOM_Ynp", make_broom, ("n", "p")),
        FamilySpec("STARLIKE", make_starlike, ("n", "legs"), ("legs",)),
        FamilySpec("DSTARLIKE", make_double_starlike, ("n", "delta", "delta2", "legs_a", "legs_b"), ("legs_a", "legs_b")),
        FamilySpec("A_gDelta", make_A, ("n", "g", "delta", "legs"), ("legs",)),
        FamilySpec("B_gDelta", make_B, ("n", "g", "delta")),
        FamilySpec("HMINSEQ", make_hmin, ("n", "b")),
        FamilySpec("HMAXSEQ", make_hmax, ("n", "b")),
        FamilySpec("COMPLETE_SPLIT", make_complete_split, ("m", "t")),
        FamilySpec("H_nkt", make_H, ("n", "k", "t")),
    )
}


def build_family(family_id: str, **params) -> Graph:
    try:
        spec = FAMILIES[family_id]
    except KeyError:
        raise FamilyError(f"unknown family {family_id!r}; known: {', '.join(FAMILIES)}") from None
    missing = [p for p in spec.params if p not in params]
    if missing:
        raise FamilyError(f"{family_id} needs parameters {', '.join(missing)}")
    return spec.build(**{p: params[p] for p in spec.params})


__all__ = [name for name in dir() if name.startswith(("make_", "has_"))] + [
    "ACYCLIC",
    "FAMILIES",
    "FamilyError",
    "FamilySpec",
    "build_family",
]
