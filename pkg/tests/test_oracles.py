import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polaron import om, oracles
from polaron.errors import DomainError
from polaron.quadrature import Tolerance

GRID = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0)


def test_i1_numeric_examples():
    alpha = 1.5 * math.sqrt(math.pi)  # omega = 1
    assert oracles.i1_numeric(alpha).value == pytest.approx(1.5, rel=1e-10)
    for alpha in (1.0, 10.0):
        assert oracles.i1_numeric(alpha).value == pytest.approx(om.i1_closed(alpha), rel=1e-8)


def test_i2_numeric_examples():
    assert oracles.i2_numeric(0.0).value == 0.0
    assert oracles.i2_bare_numeric().value == pytest.approx(0.0221389, abs=5e-8)
    assert oracles.i2_bare_numeric().value == pytest.approx(om.I2_CONSTANT, rel=1e-12)
    assert oracles.i2_numeric(5.0).value == pytest.approx(om.i2_closed(5.0), rel=1e-10)


def test_i3_numeric_examples():
    assert oracles.i3_numeric(1.0).value == pytest.approx(-1 / (12 * math.pi), rel=1e-12)
    assert oracles.i3_numeric(2.0).value == pytest.approx(-1 / (3 * math.pi), rel=1e-12)


def test_second_order_numeric_examples():
    for alpha in (1.0, 3.0):
        b = om.ground_state_energy(alpha)
        assert oracles.second_order_numeric(alpha).value == pytest.approx(b.i1 + b.i2 + b.i3, rel=1e-7)
    assert oracles.second_order_numeric(1e-3).value / 1e-3 == pytest.approx(1.0, abs=1e-2)


@given(st.floats(min_value=0.0, max_value=2.0))
def test_arcsin_excess_matches_direct_formula(t):
    value = oracles.arcsin_excess(t)
    if t > 0.5:
        assert value == pytest.approx(2 * math.asin(t / 2) / t - 1, rel=1e-13, abs=1e-16)
    assert 0.0 <= value <= math.pi - 1


def test_arcsin_excess_small_t():
    assert oracles.arcsin_excess(0.0) == 0.0
    assert oracles.arcsin_excess(1e-4) == pytest.approx(1e-8 / 24, rel=1e-8)


@pytest.mark.parametrize("alpha", GRID)
def test_thresholds_on_grid(alpha):
    for report in oracles.verify_all([alpha]):
        assert report.passed, report
        assert report.rel_diff <= oracles.THRESHOLDS[report.name]


def test_verify_single_alpha():
    reports = oracles.verify_all([1.0])
    assert [r.name for r in reports] == list(oracles.QUANTITIES)
    assert all(r.rel_diff <= 1e-7 for r in reports)


def test_verify_cardinality_and_order():
    reports = oracles.verify_all([0.1, 1.0, 10.0])
    assert len(reports) == 15
    assert [(r.name, r.alpha) for r in reports] == [
        (name, a) for name in oracles.QUANTITIES for a in (0.1, 1.0, 10.0)
    ]


def test_verify_empty_grid():
    with pytest.raises(DomainError):
        oracles.verify_all([])


def test_verify_rejects_nonpositive_alpha():
    with pytest.raises(DomainError):
        oracles.verify_all([1.0, 0.0])


def test_failed_quadrature_is_reported_not_raised():
    starved = Tolerance(abs_tol=1e-15, rel_tol=1e-15, max_evaluations=10)
    reports = oracles.verify_all([1.0], starved)
    assert len(reports) == 5
    failed = [r for r in reports if r.error]
    assert failed
    assert not any(r.passed for r in failed)
    assert all(math.isnan(r.numeric_value) for r in failed)
