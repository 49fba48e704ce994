import os
from pathlib import Path

import pytest

import gkmgraph as g

FIXTURES = Path(os.environ.get("GKM_FIXTURES", Path(__file__).resolve().parents[2] / "tests" / "fixtures"))


@pytest.fixture
def cp1():
    return g.Graph.load(str(FIXTURES / "cp1.json"))


def test_two_vertex_character(cp1):
    chi = cp1.character("f", [1, 0])
    assert str(chi) == "1*x^(-1,0) + 1 + 1*x^(1,0)"
    assert chi.terms() == {(-1, 0): 1, (0, 0): 1, (1, 0): 1}
    assert cp1.character("f", [-3, 2], method="oracle") == chi


def test_projective_plane():
    cp2 = g.Graph.projective(2)
    assert cp2.vertices == ["P0", "P1", "P2"]
    assert cp2.character("f", [1, 2]).terms() == {(0, 0): 1, (1, 0): 1, (0, 1): 1}
    assert cp2.multiplicity("f", [1, 2], [1, 0]) == 1
    assert cp2.multiplicity("f", [1, 2], [1, 1]) == 0


def test_reduction(cp1):
    ok, inv, red = cp1.qr_check("f", [1, 0])
    assert ok and inv == red
    assert str(red) == "1"
    assert str(cp1.reduce("f", [1, 0], "0")) == "1"
    assert cp1.reduce("f", [1, 0], "2").is_zero()


def test_errors(cp1):
    with pytest.raises(g.NotGeneric):
        cp1.character("f", [0, 1])
    with pytest.raises(g.NotPrimitive):
        cp1.character("f", [2, 0])
    with pytest.raises(g.ParseError):
        g.Graph.from_json("{ not json")
    bad = g.Graph.load(str(FIXTURES / "cp1_bad_class.json"))
    codes = {v["code"] for v in bad.validate_class(bad.class_names[0])}
    assert "E_COMPAT" in codes
    with pytest.raises(g.GkmError):
        g.Graph.load(str(FIXTURES / "proportional.json"))


def test_big_coefficients_round_trip():
    big = 10**40 + 7
    p = g.LaurentPoly(2, {(1, -1): big})
    assert p.coefficient([1, -1]) == big
    assert (p * p).coefficient([2, -2]) == big * big


def test_json_round_trip(cp1):
    again = g.Graph.from_json(cp1.to_json())
    assert again.vertices == cp1.vertices
    assert again.values("f") == cp1.values("f")


def test_selftest_is_deterministic():
    a = g.selftest(42)
    assert a == g.selftest(42)
    assert all(not e["failures"] for e in a)
    corrupt = g.selftest(42, inject_corrupt=True)
    assert any(e["failures"] for e in corrupt)
