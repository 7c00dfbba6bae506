"""QSPR datasets: octane isomers and benzenoid hydrocarbons.

Every index here depends only on the edge-degree distribution, so each table
row is reduced to its distribution (solved from the printed values). Molecule
graphs are attached for all octanes (matched by fingerprint against the
enumerated chemical trees) and for the benzenoids whose skeleton is fixed by
the fingerprint.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Mapping, Optional, Sequence

import numpy as np

from . import chem_data
from .canon import canonical_form
from .enumeration import ClassConstraints, select
from .graph import Graph, edge_degree_distribution
from .invariants import INDEX_ORDER, IndexKind, edge_term, indices_from_distribution, index_vector

REL_TOL = 5e-4
SOLVE_TOL = 1e-3


class PropertyKind(str, Enum):
    BP = "BP"
    AcenFac = "AcenFac"
    Entropy = "Entropy"
    SNar = "SNar"
    HNar = "HNar"
    HVAP = "HVAP"
    DHVAP = "DHVAP"


OCTANE_PROPERTIES = (
    PropertyKind.AcenFac,
    PropertyKind.Entropy,
    PropertyKind.SNar,
    PropertyKind.HNar,
    PropertyKind.HVAP,
    PropertyKind.DHVAP,
)


class DataError(ValueError):
    pass


@dataclass(frozen=True)
class Compound:
    row: int
    kind: str
    name: Optional[str]
    properties: Mapping[PropertyKind, float]
    table_indices: tuple
    edge_distribution: Mapping[tuple, int]
    graph: Optional[Graph] = None


@dataclass(frozen=True)
class RegressionFit:
    slope: float
    intercept: float
    r: float
    n: int


# Molecule skeletons.

def alkane(chain: int, substituents: Sequence[tuple] = ()) -> Graph:
    """Carbon skeleton: a main chain with alkyl branches at 1-based positions."""
    edges = [(k, k + 1) for k in range(chain - 1)]
    nxt = chain
    for pos, length in substituents:
        prev = pos - 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def benzenoid(hexagons: Sequence[tuple]) -> Graph:
    """Carbon skeleton of fused hexagons given by axial coordinates (q, r)."""
    index: dict[tuple, int] = {}
    edges = set()
    for q, r in hexagons:
        cx, cy = math.sqrt(3) * (q + r / 2), 1.5 * r
        ring = []
        for k in range(6):
            a = math.radians(60 * k + 30)
            key = (round(cx + math.cos(a), 6) + 0.0, round(cy + math.sin(a), 6) + 0.0)
            ring.append(index.setdefault(key, len(index)))
        for k in range(6):
            u, v = ring[k], ring[(k + 1) % 6]
            edges.add((min(u, v), max(u, v)))
    return Graph(len(index), sorted(edges))


# Reconstruction of edge-degree distributions.

BENZENOID_PAIRS = ((2, 2), (2, 3), (3, 3))
OCTANE_PAIRS = tuple(
    (i, j) for i in range(1, 5) for j in range(i, 5) if (i, j) != (1, 1)
)


def _close(values: Sequence[float], target: Sequence[float], tol: float) -> bool:
    return all(abs(a - b) <= tol for a, b in zip(values, target))


@lru_cache(maxsize=None)
def _octane_candidates() -> tuple:
    """Every distribution of 7 edges over degree pairs 1..4, with its index vector."""
    out = []
    for combo in combinations_with_replacement(OCTANE_PAIRS, 7):
        dist: dict = {}
        for p in combo:
            dist[p] = dist.get(p, 0) + 1
        out.append((dist, indices_from_distribution(dist).as_tuple()))
    return tuple(out)


def solve_edge_distribution(values: Sequence[float], kind: str, row: int | None = None) -> dict:
    """Recover the integer ``m_ij`` that reproduce a table row's seven index values.

    Benzenoids: least squares over the pairs (2,2), (2,3), (3,3), rounded and
    re-validated. Octanes: exhaustive search over the 7-edge distributions on
    degrees 1..4, which must have exactly one match.
    """
    label = f"{kind} row {row}" if row is not None else kind
    target = tuple(float(v) for v in values)
    if kind == "benzenoid":
        a = np.array([[edge_term(k, i, j) for (i, j) in BENZENOID_PAIRS] for k in INDEX_ORDER])
        sol, *_ = np.linalg.lstsq(a, np.array(target), rcond=None)
        counts = [int(round(x)) for x in sol]
        if min(counts) < 0:
            raise DataError(f"{label}: negative edge count in {counts}")
        dist = {p: c for p, c in zip(BENZENOID_PAIRS, counts) if c}
        if not _close(indices_from_distribution(dist).as_tuple(), target, SOLVE_TOL):
            raise DataError(f"{label}: no integer distribution reproduces the row")
        return dist
    if kind == "octane":
        found = [dist for dist, vec in _octane_candidates() if _close(vec, target, SOLVE_TOL)]
        if len(found) != 1:
            raise DataError(f"{label}: {len(found)} distributions reproduce the row")
        return found[0]
    raise DataError(f"unknown compound class {kind!r}")


def _rel_ok(got: Sequence[float], want: Sequence[float], tol: float = REL_TOL) -> bool:
    return all(abs(g - w) <= tol * max(abs(w), 1e-12) for g, w in zip(got, want))


# Datasets.

def _chemical_trees() -> list[Graph]:
    return list(select(ClassConstraints(n=8, kind="tree", max_degree=range(0, 5))))


def match_octanes() -> dict[int, Graph]:
    """Assign every chemical tree on 8 vertices to the tabulated row with its fingerprint.

    Rows whose fingerprints coincide (3/4 and 11/12) are told apart by their
    named skeletons; everything else is decided by the index values alone.
    """
    trees = _chemical_trees()
    vectors = [index_vector(t).as_tuple() for t in trees]
    named = [canonical_form(alkane(c, s)) for c, s in chem_data.OCTANE_SKELETONS]
    result: dict[int, Graph] = {}
    for row, (_, _, table) in enumerate(chem_data.OCTANES, start=1):
        candidates = [t for t, v in zip(trees, vectors) if _rel_ok(v, table)]
        if len(candidates) > 1:
            candidates = [t for t in candidates if canonical_form(t) == named[row - 1]]
        if len(candidates) != 1:
            raise DataError(f"octane row {row}: {len(candidates)} matching trees")
        result[row] = candidates[0]
    keys = {canonical_form(g) for g in result.values()}
    if len(keys) != len(result) or len(trees) != len(result):
        raise DataError("octane assignment is not a bijection")
    return result


def ambiguous_octane_rows() -> list[tuple[int, ...]]:
    """Groups of rows with identical index columns (indistinguishable by fingerprint)."""
    groups: dict[tuple, list] = {}
    for row, (_, _, table) in enumerate(chem_data.OCTANES, start=1):
        groups.setdefault(tuple(table), []).append(row)
    return [tuple(rows) for rows in groups.values() if len(rows) > 1]


_CACHE: dict[str, list] = {}


def load_dataset(kind: str) -> list[Compound]:
    if kind in _CACHE:
        return _CACHE[kind]
    if kind == "octane":
        graphs = match_octanes()
        out = []
        for row, (name, props, table) in enumerate(chem_data.OCTANES, start=1):
            dist = solve_edge_distribution(table, "octane", row)
            g = graphs[row]
            if edge_degree_distribution(g) != dist:
                raise DataError(f"octane row {row}: matched tree disagrees with the solved distribution")
            out.append(Compound(row, "octane", name, dict(zip(OCTANE_PROPERTIES, props)), tuple(table), dist, g))
    elif kind == "benzenoid":
        out = []
        for row, (bp, table) in enumerate(chem_data.BENZENOIDS, start=1):
            dist = solve_edge_distribution(table, "benzenoid", row)
            name, g = None, None
            if row in chem_data.BENZENOID_SKELETONS:
                name, hexes = chem_data.BENZENOID_SKELETONS[row]
                g = benzenoid(hexes)
                if edge_degree_distribution(g) != dist:
                    raise DataError(f"benzenoid row {row}: {name} skeleton disagrees with the solved distribution")
            out.append(Compound(row, "benzenoid", name, {PropertyKind.BP: float(bp)}, tuple(table), dist, g))
    else:
        raise DataError(f"unknown dataset {kind!r}; use 'octane' or 'benzenoid'")
    _CACHE[kind] = out
    return out


# Regression.

def linear_fit(x: Sequence[float], y: Sequence[float]) -> RegressionFit:
    """Ordinary least squares ``y = slope*x + intercept`` with the signed Pearson r."""
    if len(x) != len(y) or len(x) < 2:
        raise ValueError("linear_fit needs two equal-length sequences of at least 2 points")
    try:
        slope, intercept = statistics.linear_regression(x, y)
        r = statistics.correlation(x, y)
    except statistics.StatisticsError as exc:
        raise ValueError(f"degenerate fit: {exc}") from None
    return RegressionFit(slope, intercept, r, len(x))


def index_column(compounds: Sequence[Compound], kind, source: str = "recomputed") -> list[float]:
    """Index values per compound: recomputed from ``m_ij`` or as printed in the table."""
    kind = IndexKind(kind)
    if source == "table":
        pos = INDEX_ORDER.index(kind)
        return [float(c.table_indices[pos]) for c in compounds]
    if source != "recomputed":
        raise ValueError(f"unknown index source {source!r}")
    return [indices_from_distribution(c.edge_distribution)[kind] for c in compounds]


def property_column(compounds: Sequence[Compound], prop) -> list[float]:
    prop = PropertyKind(prop)
    return [c.properties[prop] for c in compounds]


def fit(kind: str, prop, index, source: str = "recomputed") -> RegressionFit:
    data = load_dataset(kind)
    return linear_fit(index_column(data, index, source), property_column(data, prop))


def bp_models(source: str = "recomputed") -> dict[IndexKind, RegressionFit]:
    return {k: fit("benzenoid", PropertyKind.BP, k, source) for k in INDEX_ORDER}


def octane_models(source: str = "recomputed") -> dict[tuple[PropertyKind, IndexKind], RegressionFit]:
    return {(p, k): fit("octane", p, k, source) for p in OCTANE_PROPERTIES for k in INDEX_ORDER}


def correlation_matrix(source: str = "recomputed") -> dict[tuple[PropertyKind, IndexKind], float]:
    return {key: abs(f.r) for key, f in octane_models(source).items()}


def decimals_of(text: str) -> int:
    return max(-Decimal(text).as_tuple().exponent, 0)


def matches_printed(value: float, printed: str) -> bool:
    """Is ``printed`` the value rounded, or truncated, to its own number of decimals?

    Published values mix both conventions, so either is accepted: the
    magnitude must lie in ``[|p| - u/2, |p| + u)`` with ``u`` one unit in the
    last printed place, and the signs must agree.
    """
    p = float(printed)
    if value != 0 and p != 0 and (value < 0) != (p < 0):
        return False
    unit = 10.0 ** -decimals_of(printed)
    eps = 1e-9 * unit
    return abs(p) - unit / 2 - eps <= abs(value) < abs(p) + unit + eps


@dataclass
class PrintedComparison:
    label: str
    printed: str
    value: float

    @property
    def ok(self) -> bool:
        return matches_printed(self.value, self.printed)


def compare_printed(source: str = "recomputed") -> list[PrintedComparison]:
    """Every printed slope, intercept and |R| against the corresponding fit."""
    out = []
    for k, f in bp_models(source).items():
        slope, intercept, r = chem_data.BP_MODELS[k.value]
        out += [
            PrintedComparison(f"BP~{k.value} slope", slope, f.slope),
            PrintedComparison(f"BP~{k.value} intercept", intercept, f.intercept),
            PrintedComparison(f"BP~{k.value} R", r, abs(f.r)),
        ]
    models = octane_models(source)
    for p in OCTANE_PROPERTIES:
        for k, printed in zip(INDEX_ORDER, chem_data.CORRELATION_TABLE[p.value]):
            out.append(PrintedComparison(f"|R| {p.value}~{k.value}", printed, abs(models[(p, k)].r)))
    for (p, k), (slope, intercept) in chem_data.OCTANE_MODELS.items():
        f = models[(PropertyKind(p), IndexKind(k))]
        out += [
            PrintedComparison(f"{p}~{k} slope", slope, f.slope),
            PrintedComparison(f"{p}~{k} intercept", intercept, f.intercept),
        ]
    return out
