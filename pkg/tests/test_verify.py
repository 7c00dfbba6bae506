from __future__ import annotations

import json

import pytest

from sombor.enumeration import all_trees
from sombor.families import has_hmin_degree_sequence, make_broom
from sombor.canon import canonical_form
from sombor.graph import GraphError, branching_number, pendent_vertices
from sombor.io import parse_graph6
from sombor.invariants import so1_doubled_exact
from sombor.verify import (
    ALL_IDS,
    REGISTRY,
    TheoremCheck,
    _twos_on_pendent_paths,
    check_conjecture,
    check_structural_lemmas,
    profile,
    run_check,
    verify,
)

# Checks whose brute force disagrees with the stated characterization (the values agree).
DISCREPANT = {"T5.1", "T6.3"}

T51_DISCREPANT = {(n, p) for n in range(6, 13) for p in range(3, n - 2)}
T63_DISCREPANT = {
    (7, 2), (8, 2), (9, 2), (9, 3), (10, 2), (10, 3),
    (11, 2), (11, 3), (11, 4), (12, 2), (12, 3), (12, 4),
}


@pytest.fixture(scope="module")
def reports():
    return {cid: verify(cid) for cid in ALL_IDS}


def test_every_other_check_passes(reports):
    for cid, rep in reports.items():
        want = "discrepancy" if cid in DISCREPANT else "pass"
        assert rep.verdict == want, rep.summary()
        assert rep.consistent
        assert rep.count("fail") == 0


def test_bounds_are_internally_consistent(reports):
    """Where a bound is tight it equals the brute-force extremum, recomputed both ways."""
    for cid, rep in reports.items():
        check = REGISTRY.get(cid)
        for rec in rep.combos:
            if rec.status == "vacuous" or rec.achieved is None:
                continue
            for g6 in rec.extremal:
                p = profile(parse_graph6(g6))
                assert p.so1x2 == p.so1x2_dist == rec.achieved
            if check is not None and check.tight and not check.equality and rec.bound is not None:
                assert rec.bound == rec.achieved, (cid, rec.params)


def test_t51_discrepancy_is_frozen(reports):
    rep = reports["T5.1"]
    found = {(c.params["n"], c.params["p"]) for c in rep.combos if c.status == "discrepancy"}
    assert found == T51_DISCREPANT
    for c in rep.combos:
        assert not c.missing       # the broom is always extremal
        assert c.achieved == c.bound


def test_t51_extremal_trees_are_exactly_the_spiders():
    for n in range(4, 13):
        trees = list(all_trees(n))
        for p in range(2, n):
            cls = [t for t in trees if len(pendent_vertices(t)) == p]
            best = max(so1_doubled_exact(t) for t in cls)
            assert best == (p - 1) * p * (p + 1)
            extremal = {canonical_form(t) for t in cls if so1_doubled_exact(t) == best}
            spiders = {canonical_form(t) for t in cls if branching_number(t) <= 1}
            assert extremal == spiders
            assert canonical_form(make_broom(n, p)) in extremal


def test_t63_discrepancy_is_frozen(reports):
    rep = reports["T6.3"]
    found = {(c.params["n"], c.params["b"]) for c in rep.combos if c.status == "discrepancy"}
    assert found == T63_DISCREPANT
    for c in rep.combos:
        assert not c.unexpected    # every extremal tree has the stated degree sequence
        assert c.achieved == c.bound == 2 * (4 * c.params["b"] + 8)


def test_t63_extremal_trees_need_twos_on_pendent_paths():
    for n in range(6, 13):
        trees = list(all_trees(n))
        for b in range(1, (n - 2) // 2 + 1):
            cls = [t for t in trees if branching_number(t) == b]
            best = min(so1_doubled_exact(t) for t in cls)
            extremal = {canonical_form(t) for t in cls if so1_doubled_exact(t) == best}
            shaped = {canonical_form(t) for t in cls if has_hmin_degree_sequence(t, b) and _twos_on_pendent_paths(t)}
            assert extremal == shaped


def test_t68_degree_sequence_characterization_holds(reports):
    rep = reports["T6.8"]
    assert all(c.status == "pass" and c.achieved == c.bound for c in rep.combos)


def test_chains(reports):
    lows = reports["C6.4"]
    assert all(c.note.split(": ")[1].startswith("24") for c in lows.combos if c.class_size)
    assert lows.verdict == reports["C6.9"].verdict == "pass"


def test_t71_centres_adjacent_and_vacuous_combos(reports):
    rep = reports["T7.1"]
    assert rep.count("vacuous") == 45
    assert all(c.class_size == 0 for c in rep.combos if c.status == "vacuous")


def test_structural_lemmas():
    rep = check_structural_lemmas(12)
    assert rep.verdict == "pass"
    assert {c.params["lemma"] for c in rep.combos} == {"L1.2", "L6.1", "L6.5", "L6.6", "L4.2"}


def test_conjecture_harness():
    rep = check_conjecture()
    assert {(r.n, r.k) for r in rep.records} == {(n, k) for n in range(4, 8) for k in range(1, n - 2)}
    assert rep.structure_ok
    assert rep.verdict in {"consistent", "counterexample found"}
    for r in rep.records:
        for g6 in r.extremal:
            assert profile(parse_graph6(g6)).so1x2 == r.achieved
    json.dumps(rep.to_dict())


def test_report_serializes(reports):
    for rep in reports.values():
        data = json.loads(json.dumps(rep.to_dict()))
        assert data["verdict"] == rep.verdict
        assert rep.summary().startswith(rep.id)


def test_n_max_is_respected():
    rep = verify("T2.1", 7)
    assert rep.n_max == 7
    assert max(c.params["n"] for c in rep.combos) == 7


def test_unknown_id():
    with pytest.raises(KeyError):
        verify("T9.9")


def test_class_member_outside_declared_combos_is_an_error():
    check = TheoremCheck(
        id="X", statement="broken", kind="tree", direction="max",
        combos=lambda n: [{"n": n, "p": 2}],
        classify=lambda g, p: {"n": g.order, "p": p.pendents},
        bound=lambda params: None, n_min=5, n_max=5,
    )
    with pytest.raises(GraphError):
        run_check(check)
