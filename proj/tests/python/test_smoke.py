import os
import subprocess

import pytest

import ordalg


def test_fixture_classification():
    fig1 = ordalg.fixture_poset("fig1")
    assert len(fig1) == 6
    stone = ordalg.classify(fig1, "stone")
    assert stone["holds"] is False
    assert stone["witness"]["reason"] == "U(a*,a**)={c,d,1} but 0*=1"
    assert ordalg.classify(fig1, "rpc")["holds"]
    assert ordalg.is_distributive(ordalg.fixture_poset("fig5"))["witness"] == {"x": "a", "y": "c", "z": "b"}


def test_poset_construction():
    p = ordalg.Poset(["0", "a", "1"], [("0", "a"), ("a", "1")])
    assert p.leq("0", "1")
    assert p.covers() == [("0", "a"), ("a", "1")]
    with pytest.raises(ordalg.OrdalgError) as e:
        ordalg.Poset(["a", "b"], [("a", "b"), ("b", "a")])
    assert e.value.code == "CycleDetected"


def test_assign_and_verify():
    fig1 = ordalg.fixture_poset("fig1")
    assert ordalg.choice_count(fig1, "pc") == 3
    assert ordalg.choice_count(fig1, "stone") == 9
    a = ordalg.assign(fig1, "pc", 2)
    assert a.apply("*", ["a"]) == "b"
    assert a.apply("meet", ["c", "d"]) == "b"
    assert ordalg.verify_conditions(a, "pc")["holds"]
    with pytest.raises(ordalg.OrdalgError):
        ordalg.assign(fig1, "stone")
    audit = ordalg.audit(fig1, "stone")
    assert audit["poset_verdict"] is False
    assert audit["divergences"] == []


def test_congruences_and_terms():
    a = ordalg.fixture_algebra("fig1", "fig1_rpc")
    lattice = ordalg.congruences(a)
    assert lattice["validated"]
    props = ordalg.congruence_properties(a, "1")
    assert props["permutable"] and props["weakly_regular"]
    assert all(t["holds"] for t in ordalg.term_conditions(a, "rpc"))


def test_product_round_trip():
    a = ordalg.fixture_algebra("fig1", "fig1_pc")
    p = ordalg.product(a, a)
    assert len(p) == 36
    d = ordalg.decompose(p)
    assert d["decomposable"]
    f = ordalg.algebra_from_json(__import__("json").dumps(d["first"]))
    assert ordalg.isomorphic(f, a)
    text = ordalg.algebra_text(a, "fig1")
    assert ordalg.load_algebra(text, "fig1_alg") == a


def test_text_and_search():
    for name in ordalg.fixture_names():
        text = ordalg.fixture_text(name)
        assert ordalg.canonical_text(text) == text
    hits = ordalg.search(6, 6, "rpc and not lattice", limit=1)
    assert len(hits) == 1 and ordalg.check(hits[0], "rpc")


@pytest.mark.skipif("ORDALG_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes():
    cli = os.environ["ORDALG_CLI"]
    assert subprocess.run([cli, "check", "fig1.ord", "--class=stone"], capture_output=True).returncode == 1
    assert subprocess.run([cli, "check", "fig2.ord", "--class=stone"], capture_output=True).returncode == 0
    assert subprocess.run([cli, "nonsense"], capture_output=True).returncode == 2
