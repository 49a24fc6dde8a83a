import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polaron.errors import DomainError
from polaron.special import gamma_ratio, log_gamma, log_gamma_ratio

mpmath.mp.dps = 40


def mp_gamma_ratio(z):
    z = mpmath.mpf(z)
    return float(mpmath.exp(mpmath.loggamma(1 + z) - mpmath.loggamma(z + mpmath.mpf(1) / 2)))


@pytest.mark.parametrize(
    "x, expected",
    [(1.0, 0.0), (0.5, 0.5 * math.log(math.pi)), (8.0, math.log(5040.0))],
)
def test_log_gamma_examples(x, expected):
    assert log_gamma(x) == pytest.approx(expected, rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("n", range(2, 21))
def test_log_gamma_factorials(n):
    expected = math.log(math.factorial(n - 1))
    assert log_gamma(n) == pytest.approx(expected, rel=1e-12, abs=1e-15)


@pytest.mark.parametrize("x", np.geomspace(1e-6, 1e9, 31))
def test_log_gamma_against_mpmath(x):
    ref = float(mpmath.loggamma(mpmath.mpf(float(x))))
    assert log_gamma(x) == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_log_gamma_domain(bad):
    with pytest.raises(DomainError):
        log_gamma(bad)


def test_gamma_ratio_examples():
    assert gamma_ratio(1.0) == pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-14)
    assert gamma_ratio(1e-14) == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-12)
    # frozen from mpmath at 50 digits
    assert gamma_ratio(100.0) == pytest.approx(10.012507763609312, rel=1e-14)
    assert gamma_ratio(100.0) == pytest.approx(10.0 * (1 + 1 / 800), rel=1e-5)


@pytest.mark.parametrize("z", np.geomspace(1e-9, 1e9, 73))
def test_gamma_ratio_against_mpmath(z):
    assert gamma_ratio(z) == pytest.approx(mp_gamma_ratio(float(z)), rel=1e-12)


def test_gamma_ratio_continuous_across_series_switch():
    below = math.nextafter(10.0, 0.0)
    assert gamma_ratio(below) == pytest.approx(gamma_ratio(10.0), rel=1e-14)


def test_gamma_ratio_domain():
    with pytest.raises(DomainError):
        gamma_ratio(0.0)
    with pytest.raises(DomainError):
        log_gamma_ratio(-2.0)


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=-3.0, max_value=6.0))
def test_gamma_ratio_shift_recurrence(log10_z):
    z = 10.0 ** log10_z
    lhs = gamma_ratio(1.0 + z)
    rhs = gamma_ratio(z) * (1.0 + z) / (0.5 + z)
    assert lhs == pytest.approx(rhs, rel=1e-11)


def test_gamma_ratio_over_sqrt_decreases_to_one():
    z = np.geomspace(10.0, 1e8, 200)
    ratio = np.array([gamma_ratio(v) / math.sqrt(v) for v in z])
    assert np.all(ratio > 1.0)
    assert np.all(np.diff(ratio) < 0.0)
    assert ratio[-1] == pytest.approx(1.0, abs=1e-8)
