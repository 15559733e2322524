import json
from fractions import Fraction

import pytest

import upq


def test_walls_of_the_basic_example():
    walls = upq.enumerate_walls((1, 1, 1, 0), -2, 2)
    assert [w.alpha for w in walls] == [Fraction(-1), Fraction(1)]
    assert walls[0].witnesses == [(0, 1, 0), (1, 0, 1)]
    assert json.loads(walls[1].to_json())["alpha"] == "1/1"


def test_engine_matches_oracle():
    t = upq.HitchinPairType(2, 1, 1, 0)
    fast = upq.enumerate_walls(t, 0, 1, threads=1)
    slow = upq.brute_force_walls(t, 0, 1)
    assert [(w.alpha, w.witnesses) for w in fast] == [(w.alpha, w.witnesses) for w in slow]


def test_rationals_round_trip():
    t = (2, 1, 1, 0)
    assert upq.toledo(t) == Fraction(2, 3)
    assert upq.alpha_slope(t, 3) == Fraction(7, 3)
    c1, c2 = upq.c_pair(t, "3/1")
    assert c2 - c1 == 3
    b = upq.toledo_bounds(2, 5, 3, Fraction(-7, 2))
    assert (b.lower, b.upper, b.regime) == (-3, 10, "i")
    assert 0 in b


def test_mw_check_and_chambers():
    v = upq.mw_check((1, 1, 3, 0), 2, 0)
    assert not v.passed and v.side == "upper" and v.margin == 1
    assert upq.mw_check((1, 1, 1, 0), 2, 0, ranks=(1, 1)).passed
    report = upq.chamber_report((1, 1, 1, 0), -2, 2)
    assert [(c.lo, c.hi, c.lo_closed, c.hi_closed) for c in report.chambers] == [
        (-2, -1, True, False),
        (-1, 1, False, False),
        (1, 2, False, True),
    ]
    kept = upq.enumerate_walls((2, 2, 1, 0), -3, 3, mw_filter=True, genus=2)
    assert {w.alpha for w in kept} <= {w.alpha for w in upq.enumerate_walls((2, 2, 1, 0), -3, 3)}


def test_certificate():
    c = upq.certify_irreducibility((1, 1, -1, 0), 2, 0)
    assert c.closure_irreducible and c.fully_irreducible
    assert 0 in c.condition1.window
    assert not upq.certify_irreducibility((1, 1, 0, 0), 2, 0).closure_irreducible
    assert not upq.certify_irreducibility((1, 1, 3, 0), 2, 0).tau_bound_ok


def test_errors_become_python_exceptions():
    with pytest.raises(ValueError):
        upq.HitchinPairType(0, 1, 0, 0)
    with pytest.raises(ValueError):
        upq.enumerate_walls((1, 1, 1, 0), 2, -2)
    with pytest.raises(ValueError):
        upq.toledo_bounds(1, 1, 1, "1/0")
    with pytest.raises(ValueError):
        upq.certify_irreducibility((1, 1, 0, 0), 1, 0)


def test_selftest_is_deterministic():
    first = upq.selftest(seed=3, trials=5)
    assert first == upq.selftest(seed=3, trials=5, threads=1)
    assert all(s["ok"] for s in first["suites"])
