import math
from fractions import Fraction

import pytest

import dtcoords

GOLDEN = (3 + math.sqrt(5)) / 2


def test_presets():
    assert "once-punctured-torus" in dtcoords.preset_names()
    g = dtcoords.gluing("four-holed-sphere")
    assert g["surface"]["boundary_count"] == 4


def test_twist():
    out = dtcoords.act("once-punctured-torus", [{"curve": 0, "m": 3, "t": 1}], "T+0")
    assert dtcoords.to_fraction(out["coords"]) == {0: (Fraction(3), Fraction(4))}


def test_rational_coordinates_round_trip():
    c = [{"curve": 0, "m": Fraction(7, 2), "t": Fraction(-1, 3)}]
    w = "T+0 M1@0 T-0 T-0 M1@0"
    there = dtcoords.act("once-punctured-torus", c, w)["coords"]
    back = dtcoords.act("once-punctured-torus", there, dtcoords.invert_word("once-punctured-torus", w))
    assert dtcoords.to_fraction(back["coords"]) == {0: (Fraction(7, 2), Fraction(-1, 3))}


def test_count_is_gcd():
    for m, t in [(2, 0), (2, 1), (0, 3), (6, -4)]:
        assert dtcoords.count("once-punctured-torus", [{"curve": 0, "m": m, "t": t}]) == math.gcd(m, abs(t))


def test_dilatation_and_scan():
    est = dtcoords.dilatation("once-punctured-torus", "T+0 M1@0 T-0 M1@0")
    assert est["converged"]
    assert abs(est["lambda"] - GOLDEN) < 1e-6
    rows = dtcoords.scan("once-punctured-torus", 3)
    assert abs(rows[0]["log_lambda"] - math.log(GOLDEN)) < 1e-6
    assert [r["log_lambda"] for r in rows] == sorted(r["log_lambda"] for r in rows)


def test_relations():
    r = dtcoords.verify_relations("one-holed-torus", "braid", seed=7, samples=100)
    assert r["passed"]


def test_errors():
    with pytest.raises(dtcoords.ParseError, match="column 1"):
        dtcoords.act("once-punctured-torus", [], "T+9")
    with pytest.raises(dtcoords.ValidationError):
        dtcoords.count("four-holed-sphere", [{"curve": 0, "m": 1}])
