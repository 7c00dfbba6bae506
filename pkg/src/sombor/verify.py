"""Brute-force verification of the extremal SO1 results.

Every check enumerates a graph class once per order, bins the members by the
class parameters, and compares the exact extremum of ``2*SO1`` in each bin
with the closed-form bound. The extremal set is then compared with the claimed
characterization, by canonical form in both directions.

Combo statuses:

``pass``         bound holds (and is attained when the result is tight) and
                 the characterization matches;
``discrepancy``  bound correct, but the extremal set differs from the claim;
``fail``         the inequality is violated or a tight bound is not attained;
``vacuous``      the class is empty for these parameters.

A report's verdict is ``fail`` if any combo failed, else ``discrepancy`` if any
combo disagreed, else ``pass``. ``2*SO1`` is computed from the edge list and
again from the edge-degree distribution; a mismatch is itself a failure.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Iterator, Optional

from .canon import canonical_form
from .enumeration import (
    MAX_CONNECTED_ORDER,
    MAX_TREE_ORDER,
    MAX_UNICYCLIC_ORDER,
    all_connected,
    all_trees,
    all_unicyclic,
)
from .families import (
    make_B,
    make_broom,
    make_H,
    make_M,
    make_R,
    make_T,
    make_U,
    make_star_subdivided,
)
from .graph import (
    Graph,
    GraphError,
    branching_number,
    degree_counts,
    degree_sequence,
    diameter,
    edge_degree_distribution,
    girth,
    matching_number,
    max_degree,
    path_graph,
    pendent_vertices,
    second_max_degree,
    star_graph,
)
from .invariants import so1_doubled_exact, so1_doubled_from_distribution

Params = dict


@dataclass(frozen=True)
class Profile:
    """Exact ``2*SO1`` and the class parameters of one graph."""

    so1x2: int
    so1x2_dist: int
    degrees: tuple
    diameter: int
    girth: object
    matching: int
    pendents: int
    branching: int
    key: bytes

    @property
    def delta(self) -> int:
        return self.degrees[0] if self.degrees else 0

    @property
    def delta2(self) -> int:
        return self.degrees[1] if len(self.degrees) > 1 else 0


@lru_cache(maxsize=None)
def profile(g: Graph) -> Profile:
    return Profile(
        so1x2=so1_doubled_exact(g),
        so1x2_dist=so1_doubled_from_distribution(edge_degree_distribution(g)),
        degrees=degree_sequence(g),
        diameter=diameter(g),
        girth=girth(g),
        matching=matching_number(g),
        pendents=len(pendent_vertices(g)),
        branching=branching_number(g),
        key=canonical_form(g),
    )


def _graph6(key: bytes) -> str:
    return key.decode("ascii")


# Characterizations.

@dataclass(frozen=True)
class FamilySet:
    """Extremal set must equal the given graphs up to isomorphism."""

    build: Callable[[Params], Iterable[Graph]]


@dataclass(frozen=True)
class Predicate:
    """Extremal set must equal the class members satisfying ``test``.

    With ``exact=False`` only "every extremal graph satisfies test" is checked.
    """

    test: Callable[[Graph, Params], bool]
    exact: bool = True


@dataclass(frozen=True)
class Contains:
    """Extremal set must contain the given graph."""

    build: Callable[[Params], Graph]


Characterization = Optional[object]


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    statement: str
    kind: str                                   # tree | unicyclic | connected
    direction: str                              # max | min
    combos: Callable[[int], Iterable[Params]]   # expected parameter sets for order n
    classify: Callable[[Graph, Profile], Optional[Params]]
    bound: Callable[[Params], Optional[int]]    # doubled SO1 bound
    tight: bool = True
    expected: Characterization = None
    n_min: int = 1
    n_max: int = 12
    equality: bool = False                      # characterize the bound-attaining members instead
    note: Callable[[Params, int], Optional[str]] = field(default=lambda params, achieved: None)


@dataclass
class ComboRecord:
    params: dict
    class_size: int
    achieved: Optional[int]
    bound: Optional[int]
    status: str
    extremal: list = field(default_factory=list)
    expected: Optional[list] = None
    missing: list = field(default_factory=list)
    unexpected: list = field(default_factory=list)
    note: Optional[str] = None


@dataclass
class VerificationReport:
    id: str
    statement: str
    n_max: int
    combos: list
    consistent: bool = True

    @property
    def verdict(self) -> str:
        statuses = {c.status for c in self.combos}
        if "fail" in statuses or not self.consistent:
            return "fail"
        if "discrepancy" in statuses:
            return "discrepancy"
        return "pass"

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.combos)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "n_max": self.n_max,
            "verdict": self.verdict,
            "consistent": self.consistent,
            "combos": [asdict(c) for c in self.combos],
        }

    def summary(self) -> str:
        return (
            f"{self.id}: {self.verdict} (n <= {self.n_max}; {len(self.combos)} combos: "
            f"{self.count('pass')} pass, {self.count('discrepancy')} discrepancy, "
            f"{self.count('fail')} fail, {self.count('vacuous')} vacuous)"
        )


_STREAMS = {
    "tree": (all_trees, MAX_TREE_ORDER),
    "unicyclic": (all_unicyclic, MAX_UNICYCLIC_ORDER),
    "connected": (all_connected, MAX_CONNECTED_ORDER),
}


def _freeze(params: Params) -> tuple:
    return tuple(sorted(params.items()))


def _run_combo(check: TheoremCheck, params: Params, members: list) -> ComboRecord:
    bound = check.bound(params)
    if not members:
        return ComboRecord(dict(params), 0, None, bound, "vacuous")
    pick = max if check.direction == "max" else min
    achieved = pick(profile(g).so1x2 for g in members)
    target = bound if check.equality else achieved
    extremal = [g for g in members if profile(g).so1x2 == target]
    ext_keys = sorted({profile(g).key for g in extremal})
    rec = ComboRecord(dict(params), len(members), achieved, bound, "pass", [_graph6(k) for k in ext_keys])

    if bound is not None:
        holds = achieved <= bound if check.direction == "max" else achieved >= bound
        if not holds or (check.tight and achieved != bound):
            rec.status = "fail"

    exp = check.expected
    if isinstance(exp, FamilySet):
        want = sorted({canonical_form(h) for h in exp.build(params)})
        rec.expected = [_graph6(k) for k in want]
        rec.missing = [_graph6(k) for k in want if k not in ext_keys]
        rec.unexpected = [_graph6(k) for k in ext_keys if k not in want]
    elif isinstance(exp, Predicate):
        rec.unexpected = [_graph6(profile(g).key) for g in extremal if not exp.test(g, params)]
        if exp.exact:
            extra = {profile(g).key for g in members if exp.test(g, params)} - set(ext_keys)
            rec.missing = [_graph6(k) for k in sorted(extra)]
    elif isinstance(exp, Contains):
        key = canonical_form(exp.build(params))
        if key not in ext_keys:
            rec.missing = [_graph6(key)]
    if rec.status == "pass" and (rec.missing or rec.unexpected):
        rec.status = "discrepancy"
    rec.note = check.note(params, achieved)
    return rec


def run_check(check: TheoremCheck, n_max: int | None = None) -> VerificationReport:
    stream, cap = _STREAMS[check.kind]
    top = min(cap, check.n_max if n_max is None else n_max)
    records: list[ComboRecord] = []
    consistent = True
    for n in range(max(check.n_min, 1), top + 1):
        bins: dict[tuple, list] = {}
        for g in stream(n):
            p = profile(g)
            if p.so1x2 != p.so1x2_dist:
                consistent = False
            params = check.classify(g, p)
            if params is not None:
                bins.setdefault(_freeze(params), []).append(g)
        wanted = [_freeze(p) for p in check.combos(n)]
        for key in sorted(set(bins) - set(wanted)):
            raise GraphError(f"{check.id}: class member with unexpected parameters {dict(key)}")
        for key in wanted:
            records.append(_run_combo(check, dict(key), bins.get(key, [])))
    return VerificationReport(check.id, check.statement, top, records, consistent)


# Helpers shared by several registry entries.

def _is_starlike(g: Graph) -> bool:
    return branching_number(g) == 1


def _has_degree_sequence(seq: list) -> Callable[[Graph, Params], bool]:
    target = tuple(sorted(seq, reverse=True))
    return lambda g, params: degree_sequence(g) == target


def _hmin_sequence(p: Params) -> list:
    n, b = p["n"], p["b"]
    return [3] * b + [2] * (n - 2 * b - 2) + [1] * (b + 2)


def _hmax_sequence(p: Params) -> list:
    n, b = p["n"], p["b"]
    return [n - 2 * b + 1] + [3] * (b - 1) + [1] * (n - b)


def _hmax_bound(p: Params) -> int:
    n, b = p["n"], p["b"]
    x = n - 2 * b + 1
    return x ** 3 - 9 * x + 8 * (n - b)


def _dst(g: Graph, p: Params) -> bool:
    if p["delta2"] <= 2:
        return _is_starlike(g)
    deg = g.degrees
    branch = [v for v in range(g.order) if deg[v] >= 3]
    if len(branch) != 2:
        return False
    u, v = branch
    return g.has_edge(u, v) and sorted((deg[u], deg[v])) == sorted((p["delta"], p["delta2"]))


def _compositions(total: int, parts: int) -> Iterator[list]:
    """Multisets of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield []
        return
    for combo in combinations_with_replacement(range(1, total + 1), parts):
        if sum(combo) == total:
            yield list(combo)


def _b_family(n: int, g: int, delta: int) -> list:
    return [make_B(n, g, delta, legs) for legs in _compositions(n - g, delta - 2)]


def _pendent_matching_structure(g: Graph, params: Params) -> bool:
    """Every maximum matching uses only pendent edges and saturates every non-pendent vertex.

    In a tree on at least 3 vertices each matching edge contains a non-pendent
    vertex, so both properties hold for every maximum matching exactly when the
    non-pendent vertices number beta and each has a pendent neighbor.
    """
    leaves = pendent_vertices(g)
    inner = [v for v in range(g.order) if v not in leaves]
    if g.order < 3:
        return True
    return len(inner) == matching_number(g) and all(
        any(w in leaves for w in g.neighbors(v)) for v in inner
    )


def _twos_on_pendent_paths(g: Graph) -> bool:
    deg = g.degrees
    covered = set()
    for leaf in pendent_vertices(g):
        prev, cur = leaf, g.neighbors(leaf)[0]
        while deg[cur] == 2 and cur not in covered:
            covered.add(cur)
            prev, cur = cur, next(w for w in g.neighbors(cur) if w != prev)
    return all(deg[v] != 2 or v in covered for v in range(g.order))


def _is_h_nkt(g: Graph, p: Params) -> bool:
    n, k = p["n"], p["k"]
    key = canonical_form(g)
    return any(canonical_form(make_H(n, k, t)) == key for t in range(1, n - k - 1))


def _t79_structure(g: Graph, p: Params) -> bool:
    n, k = p["n"], p["k"]
    return (
        max_degree(g) == n - 1
        and g.degrees.count(n - 1) == 1
        and second_max_degree(g) == n - k - 1
    )


def _range(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


# Registry.

def _registry() -> dict[str, TheoremCheck]:
    checks = [
        TheoremCheck(
            "L1.2", "SO1(P_n) < SO1(T) < SO1(S_n) for every tree T other than P_n, S_n (n >= 5)",
            "tree", "max",
            combos=lambda n: [{"n": n}],
            classify=lambda g, p: {"n": g.order},
            bound=lambda p: None, tight=False,
            expected=Predicate(
                lambda g, p: p["n"] < 5
                or profile(g).key in {canonical_form(path_graph(p["n"])), canonical_form(star_graph(p["n"]))}
                or so1_doubled_exact(path_graph(p["n"])) < profile(g).so1x2 < so1_doubled_exact(star_graph(p["n"])),
                exact=False,
            ),
            n_min=5,
        ),
        TheoremCheck(
            "T1.3", "second-largest SO1 among trees is attained only by the subdivided star",
            "tree", "max",
            combos=lambda n: [{"n": n}],
            classify=lambda g, p: None if p.delta == g.order - 1 else {"n": g.order},
            bound=lambda p: so1_doubled_exact(make_star_subdivided(p["n"])),
            expected=FamilySet(lambda p: [make_star_subdivided(p["n"])]),
            n_min=5,
        ),
        TheoremCheck(
            "T2.1", "max SO1 over trees with diameter d is (n-d+1)((n-d+1)^2-1)/2, attained by T(n,d,i)",
            "tree", "max",
            combos=lambda n: [{"n": n, "d": d} for d in _range(2, n - 1)],
            classify=lambda g, p: {"n": g.order, "d": p.diameter} if g.order >= 3 else None,
            bound=lambda p: (p["n"] - p["d"] + 1) * ((p["n"] - p["d"] + 1) ** 2 - 1),
            expected=FamilySet(lambda p: [make_T(p["n"], p["d"], i) for i in _range(1, p["d"] - 1)]),
            n_min=3,
        ),
        TheoremCheck(
            "T2.2", "max SO1 over unicyclic graphs with diameter 4 <= d <= n-2 is [(n-d)(n-d+1)(n-d+2)+12]/2",
            "unicyclic", "max",
            combos=lambda n: [{"n": n, "d": d} for d in _range(4, n - 2)],
            classify=lambda g, p: {"n": g.order, "d": p.diameter} if p.diameter >= 4 else None,
            bound=lambda p: (p["n"] - p["d"]) * (p["n"] - p["d"] + 1) * (p["n"] - p["d"] + 2) + 12,
            expected=FamilySet(lambda p: [make_U(p["n"], p["d"], i) for i in _range(1, p["d"] - 3)]),
            n_min=6,
        ),
        TheoremCheck(
            "R3a", "max SO1 over unicyclic graphs with diameter 2 is attained by R(n,2,1)",
            "unicyclic", "max",
            combos=lambda n: [{"n": n, "d": 2}],
            classify=lambda g, p: {"n": g.order, "d": 2} if p.diameter == 2 else None,
            bound=lambda p: so1_doubled_exact(make_R(p["n"], 2, 1)),
            expected=Contains(lambda p: make_R(p["n"], 2, 1)),
            n_min=4,
        ),
        TheoremCheck(
            "R3b", "max SO1 over unicyclic graphs with diameter 3 is attained by R(n,3,1)",
            "unicyclic", "max",
            combos=lambda n: [{"n": n, "d": 3}],
            classify=lambda g, p: {"n": g.order, "d": 3} if p.diameter == 3 else None,
            bound=lambda p: so1_doubled_exact(make_R(p["n"], 3, 1)),
            expected=Contains(lambda p: make_R(p["n"], 3, 1)),
            n_min=5,
        ),
        TheoremCheck(
            "T4.3", "max SO1 over trees of order 2*beta with a perfect matching is (beta-1)beta(beta+1)/2",
            "tree", "max",
            combos=lambda n: [{"n": n, "beta": n // 2}] if n % 2 == 0 else [],
            classify=lambda g, p: {"n": g.order, "beta": p.matching} if 2 * p.matching == g.order else None,
            bound=lambda p: (p["beta"] - 1) * p["beta"] * (p["beta"] + 1),
            expected=FamilySet(lambda p: [make_M(p["n"], p["beta"])]),
            n_min=2,
            note=lambda p, a: (
                f"alternative reading with an extra factor beta gives 2*SO1 = "
                f"{(p['beta'] - 1) * p['beta'] ** 2 * (p['beta'] + 1)}"
                if p["beta"] != 1 else None
            ),
        ),
        TheoremCheck(
            "T4.4", "max SO1 over trees with matching number beta is (n-beta-1)(n-beta)(n-beta+1)/2",
            "tree", "max",
            combos=lambda n: [{"n": n, "beta": b} for b in _range(1, n // 2)],
            classify=lambda g, p: {"n": g.order, "beta": p.matching},
            bound=lambda p: (p["n"] - p["beta"] - 1) * (p["n"] - p["beta"]) * (p["n"] - p["beta"] + 1),
            expected=FamilySet(lambda p: [make_M(p["n"], p["beta"])]),
            n_min=2,
        ),
        TheoremCheck(
            "T5.1", "max SO1 over trees with p pendent vertices is (p-1)p(p+1)/2, attained by the broom",
            "tree", "max",
            combos=lambda n: [{"n": n, "p": p} for p in _range(2, n - 1)],
            classify=lambda g, p: {"n": g.order, "p": p.pendents},
            bound=lambda p: (p["p"] - 1) * p["p"] * (p["p"] + 1),
            expected=FamilySet(lambda p: [make_broom(p["n"], p["p"])]),
            n_min=3,
        ),
        TheoremCheck(
            "T5.2", "every tree with p pendent vertices has SO1 <= (p-1)p(p+1)/2",
            "tree", "max",
            combos=lambda n: [{"n": n, "p": p} for p in _range(2, n - 1)],
            classify=lambda g, p: {"n": g.order, "p": p.pendents},
            bound=lambda p: (p["p"] - 1) * p["p"] * (p["p"] + 1),
            tight=False,
            n_min=3,
        ),
        TheoremCheck(
            "T6.3", "min SO1 over trees with b branching vertices is 4b+8, attained exactly on 3^b 2^(n-2b-2) 1^(b+2)",
            "tree", "min",
            combos=lambda n: [{"n": n, "b": b} for b in _range(1, (n - 2) // 2)],
            classify=lambda g, p: {"n": g.order, "b": p.branching} if p.branching >= 1 else None,
            bound=lambda p: 8 * p["b"] + 16,
            expected=Predicate(lambda g, p: _has_degree_sequence(_hmin_sequence(p))(g, p)),
            n_min=4,
        ),
        TheoremCheck(
            "T6.8", "max SO1 over trees with b branching vertices is [(n-2b+1)^3-9(n-2b+1)+8(n-b)]/2",
            "tree", "max",
            combos=lambda n: [{"n": n, "b": b} for b in _range(1, (n - 2) // 2)],
            classify=lambda g, p: {"n": g.order, "b": p.branching} if p.branching >= 1 else None,
            bound=_hmax_bound,
            expected=Predicate(lambda g, p: _has_degree_sequence(_hmax_sequence(p))(g, p)),
            n_min=4,
        ),
        TheoremCheck(
            "L6.1", "every SO1-minimal tree with b branching vertices has maximum degree <= 3",
            "tree", "min",
            combos=lambda n: [{"n": n, "b": b} for b in _range(1, (n - 2) // 2)],
            classify=lambda g, p: {"n": g.order, "b": p.branching} if p.branching >= 1 else None,
            bound=lambda p: None, tight=False,
            expected=Predicate(lambda g, p: max_degree(g) <= 3, exact=False),
            n_min=4,
        ),
        TheoremCheck(
            "L6.5", "every SO1-maximal tree with b branching vertices has no vertex of degree 2",
            "tree", "max",
            combos=lambda n: [{"n": n, "b": b} for b in _range(1, (n - 2) // 2)],
            classify=lambda g, p: {"n": g.order, "b": p.branching} if p.branching >= 1 else None,
            bound=lambda p: None, tight=False,
            expected=Predicate(lambda g, p: 2 not in g.degrees, exact=False),
            n_min=4,
        ),
        TheoremCheck(
            "L6.6", "every SO1-maximal tree with b branching vertices has at most one vertex of each degree >= 4",
            "tree", "max",
            combos=lambda n: [{"n": n, "b": b} for b in _range(1, (n - 2) // 2)],
            classify=lambda g, p: {"n": g.order, "b": p.branching} if p.branching >= 1 else None,
            bound=lambda p: None, tight=False,
            expected=Predicate(
                lambda g, p: all(c <= 1 for d, c in degree_counts(g).items() if d >= 4), exact=False
            ),
            n_min=4,
        ),
        TheoremCheck(
            "L4.2", "in every SO1-maximal tree with matching number beta, maximum matchings use only pendent edges and saturate all non-pendent vertices",
            "tree", "max",
            combos=lambda n: [{"n": n, "beta": b} for b in _range(1, n // 2)],
            classify=lambda g, p: {"n": g.order, "beta": p.matching},
            bound=lambda p: None, tight=False,
            expected=Predicate(_pendent_matching_structure, exact=False),
            n_min=3,
        ),
        TheoremCheck(
            "T7.1", "min SO1 over trees with degrees Delta, Delta2 is [(D-1)(D^2-1)+(D2-1)(D2^2-1)+D^2-D2^2]/2, attained by double starlike trees",
            "tree", "min",
            combos=lambda n: [
                {"n": n, "delta": d, "delta2": d2}
                for d in _range(3, n - 1) for d2 in _range(1, d)
                if d + d2 <= n or d2 <= 2
            ],
            classify=lambda g, p: {"n": g.order, "delta": p.delta, "delta2": p.delta2} if p.delta >= 3 else None,
            bound=lambda p: (
                (p["delta"] - 1) * (p["delta"] ** 2 - 1)
                + (p["delta2"] - 1) * (p["delta2"] ** 2 - 1)
                + p["delta"] ** 2 - p["delta2"] ** 2
            ),
            expected=Predicate(_dst),
            n_min=4,
        ),
        TheoremCheck(
            "C7.2", "min SO1 over trees with maximum degree Delta >= 3 is (Delta^3-Delta)/2, attained by starlike trees",
            "tree", "min",
            combos=lambda n: [{"n": n, "delta": d} for d in _range(3, n - 1)],
            classify=lambda g, p: {"n": g.order, "delta": p.delta} if p.delta >= 3 else None,
            bound=lambda p: p["delta"] ** 3 - p["delta"],
            expected=Predicate(lambda g, p: _is_starlike(g)),
            n_min=4,
        ),
        TheoremCheck(
            "C7.3", "min SO1 over trees with n >= 3 is 3, attained only by the path",
            "tree", "min",
            combos=lambda n: [{"n": n}],
            classify=lambda g, p: {"n": g.order},
            bound=lambda p: 6,
            expected=FamilySet(lambda p: [path_graph(p["n"])]),
            n_min=3,
        ),
        TheoremCheck(
            "T7.4", "min SO1 over unicyclic graphs with maximum degree Delta and girth g is (Delta^3-Delta-6)/2, attained by B_n(g,Delta)",
            "unicyclic", "min",
            combos=lambda n: [
                {"n": n, "delta": d, "g": g}
                for g in _range(3, n - 1) for d in _range(3, n - g + 2)
            ],
            classify=lambda g, p: {"n": g.order, "delta": p.delta, "g": p.girth} if p.delta >= 3 else None,
            bound=lambda p: p["delta"] ** 3 - p["delta"] - 6,
            expected=FamilySet(lambda p: _b_family(p["n"], p["g"], p["delta"])),
            n_min=4,
        ),
        TheoremCheck(
            "C7.5", "min SO1 over unicyclic graphs with maximum degree Delta is (Delta^3-Delta-6)/2, attained by B_n(g,Delta) for any g",
            "unicyclic", "min",
            combos=lambda n: [{"n": n, "delta": d} for d in _range(3, n - 1)],
            classify=lambda g, p: {"n": g.order, "delta": p.delta} if p.delta >= 3 else None,
            bound=lambda p: p["delta"] ** 3 - p["delta"] - 6,
            expected=FamilySet(lambda p: [
                h for g in _range(3, p["n"] - p["delta"] + 2) for h in _b_family(p["n"], g, p["delta"])
            ]),
            n_min=4,
        ),
        TheoremCheck(
            "C7.6", "min SO1 over unicyclic graphs with girth g other than C_n is 9, attained by B_n(g,3)",
            "unicyclic", "min",
            combos=lambda n: [{"n": n, "g": g} for g in _range(3, n - 1)],
            classify=lambda g, p: {"n": g.order, "g": p.girth} if p.delta >= 3 else None,
            bound=lambda p: 18,
            expected=FamilySet(lambda p: _b_family(p["n"], p["g"], 3)),
            n_min=4,
        ),
        TheoremCheck(
            "T7.7", "every connected graph other than P_n with k >= 1 pendent vertices and maximum degree Delta has SO1 >= (8k+Delta^2-9)/2",
            "connected", "min",
            combos=lambda n: [
                {"n": n, "k": k, "delta": d}
                for k in _range(1, n - 1) for d in _range(2, n - 1)
            ],
            classify=lambda g, p: (
                {"n": g.order, "k": p.pendents, "delta": p.delta}
                if p.pendents >= 1 and p.diameter != g.order - 1 else None
            ),
            bound=lambda p: 8 * p["k"] + p["delta"] ** 2 - 9,
            tight=False,
            n_min=3,
            n_max=MAX_CONNECTED_ORDER,
        ),
        TheoremCheck(
            "C7.8", "every connected graph other than P_n with k pendent vertices has SO1 >= 4k; equality needs Delta = 3 and every degree-2 vertex on a pendent path",
            "connected", "min",
            combos=lambda n: [{"n": n, "k": k} for k in _range(1, n - 1)],
            classify=lambda g, p: (
                {"n": g.order, "k": p.pendents}
                if p.pendents >= 1 and p.diameter != g.order - 1 else None
            ),
            bound=lambda p: 8 * p["k"],
            tight=False,
            equality=True,
            expected=Predicate(lambda g, p: max_degree(g) == 3 and _twos_on_pendent_paths(g)),
            n_min=3,
            n_max=MAX_CONNECTED_ORDER,
        ),
        TheoremCheck(
            "T7.9", "every SO1-maximal connected graph with 1 <= k <= n-3 pendent vertices has a unique vertex of degree n-1 and Delta2 = n-k-1",
            "connected", "max",
            combos=lambda n: [{"n": n, "k": k} for k in _range(1, n - 3)],
            classify=lambda g, p: {"n": g.order, "k": p.pendents} if 1 <= p.pendents <= g.order - 3 else None,
            bound=lambda p: None, tight=False,
            expected=Predicate(_t79_structure, exact=False),
            n_min=4,
            n_max=MAX_CONNECTED_ORDER,
        ),
    ]
    return {c.id: c for c in checks}


REGISTRY: dict[str, TheoremCheck] = _registry()
STRUCTURAL_IDS = ("L1.2", "L6.1", "L6.5", "L6.6", "L4.2")


def _chain(check_id: str, n_max: int | None, increasing: bool, first: int | None) -> VerificationReport:
    base = run_check(REGISTRY[check_id], n_max)
    by_n: dict[int, list] = {}
    for rec in base.combos:
        if rec.achieved is not None:
            by_n.setdefault(rec.params["n"], []).append((rec.params["b"], rec.achieved))
    records = []
    for n in sorted(by_n):
        values = [v for _, v in sorted(by_n[n])]
        pairs = list(zip(values, values[1:]))
        ok = all(a < b for a, b in pairs) if increasing else all(a > b for a, b in pairs)
        if first is not None and values and values[0] != first:
            ok = False
        records.append(ComboRecord(
            {"n": n}, len(values), None, None, "pass" if ok else "fail",
            note="2*SO1 over b = 1..: " + ", ".join(map(str, values)),
        ))
    statement = (
        "minimum SO1 over trees with b branching vertices increases strictly with b, starting at 12"
        if increasing else
        "maximum SO1 over trees with b branching vertices decreases strictly with b"
    )
    cid = "C6.4" if increasing else "C6.9"
    return VerificationReport(cid, statement, base.n_max, records, base.consistent)


CHAIN_IDS = ("C6.4", "C6.9")
ALL_IDS = tuple(REGISTRY) + CHAIN_IDS


def verify(check_id: str, n_max: int | None = None) -> VerificationReport:
    if check_id == "C6.4":
        return _chain("T6.3", n_max, increasing=True, first=24)
    if check_id == "C6.9":
        return _chain("T6.8", n_max, increasing=False, first=None)
    try:
        check = REGISTRY[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}; known: {', '.join(ALL_IDS)}") from None
    return run_check(check, n_max)


def check_structural_lemmas(n_max: int = 12) -> VerificationReport:
    records = []
    consistent = True
    top = 0
    for cid in STRUCTURAL_IDS:
        rep = run_check(REGISTRY[cid], n_max)
        consistent &= rep.consistent
        top = max(top, rep.n_max)
        for rec in rep.combos:
            rec.params = {"lemma": cid, **rec.params}
            records.append(rec)
    return VerificationReport("structural", "structural lemmas on brute-force extremal sets", top, records, consistent)


@dataclass
class ConjectureRecord:
    n: int
    k: int
    class_size: int
    achieved: Optional[int]
    extremal: list
    consistent: bool
    structure_ok: bool


@dataclass
class ConjectureReport:
    n_max: int
    records: list

    @property
    def verdict(self) -> str:
        return "consistent" if all(r.consistent for r in self.records) else "counterexample found"

    @property
    def structure_ok(self) -> bool:
        return all(r.structure_ok for r in self.records)

    def to_dict(self) -> dict:
        return {
            "id": "C7.10",
            "n_max": self.n_max,
            "verdict": self.verdict,
            "structure_ok": self.structure_ok,
            "records": [asdict(r) for r in self.records],
        }


def check_conjecture(n_max: int = MAX_CONNECTED_ORDER) -> ConjectureReport:
    """For each (n, k), are the SO1-maximal connected graphs all of the form H(n, k, t)?

    The outcome is reported, not asserted. The maximal-graph structure from
    the degree result (unique vertex of degree n-1, Delta2 = n-k-1) is checked
    and surfaced as ``structure_ok``.
    """
    top = min(n_max, MAX_CONNECTED_ORDER)
    records = []
    for n in range(4, top + 1):
        bins: dict[int, list] = {}
        for g in all_connected(n):
            k = profile(g).pendents
            if 1 <= k <= n - 3:
                bins.setdefault(k, []).append(g)
        for k in _range(1, n - 3):
            members = bins.get(k, [])
            if not members:
                records.append(ConjectureRecord(n, k, 0, None, [], True, True))
                continue
            best = max(profile(g).so1x2 for g in members)
            extremal = [g for g in members if profile(g).so1x2 == best]
            params = {"n": n, "k": k}
            records.append(ConjectureRecord(
                n, k, len(members), best,
                sorted(_graph6(profile(g).key) for g in extremal),
                all(_is_h_nkt(g, params) for g in extremal),
                all(_t79_structure(g, params) for g in extremal),
            ))
    return ConjectureReport(top, records)
