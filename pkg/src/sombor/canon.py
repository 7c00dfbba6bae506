"""Canonical forms for small graphs.

The canonical labeling is found by individualization-refinement: the vertex
partition is refined to an equitable one, a vertex of the first non-trivial
cell is individualized, and the search recurses until the partition is
discrete. Each leaf yields a certificate (the relabeled adjacency rows); the
smallest certificate wins. Automorphisms discovered from equal certificates
prune the search, so highly symmetric graphs (stars, complete graphs) stay
cheap.

:func:`canonical_form_bruteforce` minimizes over every permutation and is kept
as an independent oracle for tests.
"""

from __future__ import annotations

from itertools import permutations

from .graph import Graph
from .io import write_graph6

Cells = list[list[int]]


def _refine(adj: tuple[int, ...], cells: Cells) -> Cells:
    """Split cells by neighbor counts until the partition is equitable.

    Pieces are ordered by count, never by vertex label, so the result is
    invariant under relabeling.
    """
    cells = [list(c) for c in cells]
    while True:
        for w_cell in cells:
            wmask = 0
            for v in w_cell:
                wmask |= 1 << v
            new: Cells = []
            split = False
            for c in cells:
                if len(c) == 1:
                    new.append(c)
                    continue
                groups: dict[int, list[int]] = {}
                for v in c:
                    groups.setdefault((adj[v] & wmask).bit_count(), []).append(v)
                if len(groups) > 1:
                    split = True
                    new.extend(groups[k] for k in sorted(groups))
                else:
                    new.append(c)
            if split:
                cells = new
                break
        else:
            return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = adj[v]
        r = 0
        while row:
            low = row & -row
            r |= 1 << pos[low.bit_length() - 1]
            row ^= low
        rows.append(r)
    return tuple(rows)


def _orbits_of(autos: list[tuple[int, ...]], n: int) -> list[int]:
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for gamma in autos:
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                root[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` such that ``order[i]`` is the vertex placed at position ``i``."""
    n = g.order
    adj = g.adjacency
    state: dict = {"first": None, "best": None}
    autos: list[tuple[int, ...]] = []

    def leaf(order: list[int], prefix: list[int]) -> int | None:
        cert = _certificate(adj, order)
        first = state["first"]
        if first is None:
            state["first"] = state["best"] = (cert, order, prefix)
            return None
        best = state["best"]
        if cert == first[0]:
            gamma = [0] * n
            for a, b in zip(first[1], order):
                gamma[a] = b
            autos.append(tuple(gamma))
            # Leaves agree on the shared prefix, so the automorphism fixes it
            # and maps the whole divergent subtree onto an explored one.
            common = 0
            for a, b in zip(first[2], prefix):
                if a != b:
                    break
                common += 1
            return common
        if cert == best[0]:
            gamma = [0] * n
            for a, b in zip(best[1], order):
                gamma[a] = b
            autos.append(tuple(gamma))
        elif cert < best[0]:
            state["best"] = (cert, order, prefix)
        return None

    def search(cells: Cells, prefix: list[int]) -> int | None:
        depth = len(prefix)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            return leaf([c[0] for c in cells], prefix)
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored:
                stab = [a for a in autos if all(a[p] == p for p in prefix)]
                if stab:
                    orb = _orbits_of(stab, n)
                    if any(orb[v] == orb[w] for w in explored):
                        continue
            child = cells[:target] + [[v], [w for w in cells[target] if w != v]] + cells[target + 1:]
            jump = search(_refine(adj, child), prefix + [v])
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None

    search(_refine(adj, [list(range(n))]), [])
    return list(state["best"][1])


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    pos = [0] * g.order
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant key: graph6 of the canonically relabeled graph."""
    return write_graph6(canonical_graph(g)).encode("ascii")


def canonical_form_bruteforce(g: Graph) -> tuple:
    """Minimum certificate over all vertex orders. Exponential; oracle use only."""
    adj = g.adjacency
    return (g.order, min(_certificate(adj, list(p)) for p in permutations(range(g.order))))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)
