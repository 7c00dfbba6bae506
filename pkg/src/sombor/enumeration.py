"""Isomorph-free generation of the graph classes the extremal results quantify over.

Free trees come from the Wright-Richmond-Odlyzko-McKay successor rule on
canonical level sequences, one tree per isomorphism class with no
deduplication step. Unicyclic graphs are trees plus one edge, deduplicated by
canonical form. Connected graphs (n <= 7) are grown edge by edge from the empty
graph, deduplicated level by level.

Trees come out in level-sequence order and every other stream is sorted by
canonical form, so runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .canon import canonical_form
from .graph import (
    Graph,
    GraphError,
    branching_number,
    diameter,
    girth,
    is_connected,
    matching_number,
    max_degree,
    pendent_vertices,
    second_max_degree,
)

MAX_TREE_ORDER = 18
MAX_UNICYCLIC_ORDER = 14
MAX_CONNECTED_ORDER = 7


# Level sequences.

def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted level sequence (Beyer-Hedetniemi)."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """Split at the root's second child: first subtree (re-rooted) and the rest."""
    m = len(seq)
    ones = 0
    for i, level in enumerate(seq):
        if level == 1:
            ones += 1
            if ones == 2:
                m = i
                break
    left = [level - 1 for level in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _next_free(seq: list[int]) -> list[int]:
    """Return ``seq`` if it is the canonical center-rooted form, else jump ahead."""
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return seq
    p = len(left)
    out = _next_rooted(seq, p)
    if seq[p] > 2:
        new_left, _ = _split(out)
        height = max(new_left)
        out[len(out) - height - 1:] = range(1, height + 2)
    return out


def _level_sequence_to_graph(seq: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for v, level in enumerate(seq):
        del stack[level:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph(len(seq), edges)


def _free_tree_sequences(n: int) -> Iterator[list[int]]:
    if n <= 2:
        yield list(range(n))
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        yield seq
        seq = _next_rooted(seq)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    return tuple(_level_sequence_to_graph(s) for s in _free_tree_sequences(n))


def all_trees(n: int) -> Iterator[Graph]:
    """Free trees in level-sequence order (itself a canonical order for trees)."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise GraphError(f"tree order must be in 1..{MAX_TREE_ORDER}")
    if n <= 14:
        return iter(_trees(n))
    return (_level_sequence_to_graph(s) for s in _free_tree_sequences(n))


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    seen: dict[bytes, Graph] = {}
    for t in _trees(n):
        for u, v in t.non_edges():
            g = t.add_edge(u, v)
            seen.setdefault(canonical_form(g), g)
    return tuple(seen[k] for k in sorted(seen))


def all_unicyclic(n: int) -> Iterator[Graph]:
    if not 3 <= n <= MAX_UNICYCLIC_ORDER:
        raise GraphError(f"unicyclic order must be in 3..{MAX_UNICYCLIC_ORDER}")
    return iter(_unicyclic(n))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    level = {canonical_form(Graph(n)): Graph(n)}
    found = dict(level)
    while level:
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for u, v in g.non_edges():
                h = g.add_edge(u, v)
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = h
        found.update(nxt)
        level = nxt
    return tuple(found[k] for k in sorted(found))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on ``n`` vertices up to isomorphism, connected or not."""
    if not 1 <= n <= MAX_CONNECTED_ORDER:
        raise GraphError(f"graph order must be in 1..{MAX_CONNECTED_ORDER}")
    return iter(_all_graphs(n))


def all_connected(n: int) -> Iterator[Graph]:
    if not 1 <= n <= MAX_CONNECTED_ORDER:
        raise GraphError(f"connected graphs are only generated for n <= {MAX_CONNECTED_ORDER}")
    return (g for g in _all_graphs(n) if is_connected(g))


# Constraint filtering.

Constraint = Union[int, range, tuple, frozenset, set, None]


def _ok(value, want: Constraint) -> bool:
    if want is None:
        return True
    if isinstance(want, int):
        return value == want
    return value in want


@dataclass(frozen=True)
class ClassConstraints:
    """Class membership filter. Each field is an exact int or a container of allowed values."""

    n: int
    kind: str = "tree"
    diameter: Constraint = None
    matching_number: Constraint = None
    pendent_count: Constraint = None
    branching_count: Constraint = None
    max_degree: Constraint = None
    second_max_degree: Constraint = None
    girth: Constraint = None

    def accepts(self, g: Graph) -> bool:
        checks = (
            (self.max_degree, max_degree),
            (self.second_max_degree, second_max_degree),
            (self.pendent_count, lambda h: len(pendent_vertices(h))),
            (self.branching_count, branching_number),
            (self.girth, girth),
            (self.diameter, diameter),
            (self.matching_number, matching_number),
        )
        return all(_ok(fn(g), want) for want, fn in checks if want is not None)


def _stream(c: ClassConstraints) -> Iterator[Graph]:
    if c.kind == "tree":
        return all_trees(c.n)
    if c.kind == "unicyclic":
        return all_unicyclic(c.n)
    if c.kind == "connected":
        return all_connected(c.n)
    raise GraphError(f"unknown class kind {c.kind!r}")


def trees_matching(c: ClassConstraints) -> Iterator[Graph]:
    if c.kind != "tree":
        raise GraphError("trees_matching needs kind='tree'")
    return select(c)


def select(c: ClassConstraints) -> Iterator[Graph]:
    """Members of the requested class satisfying every constraint."""
    return (g for g in _stream(c) if c.accepts(g))
