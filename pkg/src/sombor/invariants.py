"""The seven Sombor-type invariants and the squared-degree path potential.

Every invariant is an edge sum of a term depending only on the two endpoint
degrees, so it is also a function of the edge-degree distribution ``m_{i,j}``.
``SO1`` is carried exactly as the integer ``2*SO1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .graph import Graph, GraphError, edge_degree_distribution

SQRT2 = math.sqrt(2.0)


class IndexKind(str, Enum):
    SO = "SO"
    SO1 = "SO1"
    SO2 = "SO2"
    SO3 = "SO3"
    SO4 = "SO4"
    SO5 = "SO5"
    SO6 = "SO6"


INDEX_ORDER = tuple(IndexKind)


def edge_term(kind: IndexKind, a: int, b: int) -> float:
    """Contribution of one edge whose endpoints have degrees ``a`` and ``b``."""
    sq = a * a + b * b
    diff = abs(a * a - b * b)
    if kind is IndexKind.SO:
        return math.sqrt(sq)
    if kind is IndexKind.SO1:
        return diff / 2
    if kind is IndexKind.SO2:
        return diff / sq
    if kind is IndexKind.SO3:
        return SQRT2 * sq / (a + b) * math.pi
    if kind is IndexKind.SO4:
        return (sq / (a + b)) ** 2 * math.pi / 2
    if kind is IndexKind.SO5:
        return 2 * diff / (SQRT2 + 2 * math.sqrt(sq)) * math.pi
    if kind is IndexKind.SO6:
        return (diff / (SQRT2 + 2 * math.sqrt(sq))) ** 2 * math.pi
    raise ValueError(f"unknown index {kind!r}")


@dataclass(frozen=True)
class IndexVector:
    values: Mapping[IndexKind, float]
    exact_so1_doubled: int

    def __getitem__(self, kind) -> float:
        return self.values[IndexKind(kind)]

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(self.values[k] for k in INDEX_ORDER)


def index(kind, g: Graph) -> float:
    """Edge-list evaluation of one invariant."""
    kind = IndexKind(kind)
    deg = g.degrees
    return math.fsum(edge_term(kind, deg[u], deg[v]) for u, v in g.edges)


def so1_doubled_exact(g: Graph) -> int:
    deg = g.degrees
    return sum(abs(deg[u] ** 2 - deg[v] ** 2) for u, v in g.edges)


def so1_doubled_from_distribution(dist: Mapping[tuple[int, int], int]) -> int:
    return sum(m * abs(i * i - j * j) for (i, j), m in dist.items())


def indices_from_distribution(dist: Mapping[tuple[int, int], int]) -> IndexVector:
    values = {
        kind: math.fsum(m * edge_term(kind, i, j) for (i, j), m in dist.items())
        for kind in INDEX_ORDER
    }
    return IndexVector(values, so1_doubled_from_distribution(dist))


def index_vector(g: Graph) -> IndexVector:
    return indices_from_distribution(edge_degree_distribution(g))


def phi_path(g: Graph, path: Sequence[int]) -> int:
    """Sum of ``|d(x)^2 - d(y)^2|`` over consecutive vertices of ``path``."""
    deg = g.degrees
    total = 0
    for x, y in zip(path, path[1:]):
        if not g.has_edge(x, y):
            raise GraphError(f"consecutive path vertices {x}, {y} are not adjacent")
        total += abs(deg[x] ** 2 - deg[y] ** 2)
    return total
