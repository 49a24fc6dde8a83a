import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polaron.errors import ConvergenceError, DomainError, IntegrandError
from polaron.quadrature import (
    DEFAULT_TOLERANCE,
    QuadratureResult,
    Tolerance,
    integrate_finite,
    integrate_semi_infinite,
)

I2_CONSTANT = -math.pi / 3 + 1 + 2 * math.log(2) - math.log(2 + math.sqrt(3))


def check(result, exact, tol=DEFAULT_TOLERANCE):
    assert isinstance(result, QuadratureResult)
    assert result.abs_err >= 0
    assert result.evaluations >= 1
    assert math.isfinite(result.value)
    assert abs(result.value - exact) <= max(tol.abs_tol, tol.rel_tol * abs(exact))


def test_constant():
    check(integrate_finite(lambda x: 1.0, 0.0, 1.0), 1.0)


def test_removable_singularity_arcsin_integrand():
    # written naively on purpose: cancellation near t = 0
    r = integrate_finite(lambda t: 2 * math.asin(t / 2) / t ** 2 - 1 / t, 0.0, 1.0)
    check(r, I2_CONSTANT)
    assert r.value == pytest.approx(0.0221389, abs=5e-8)


def test_infinite_upper_limit_routed_to_semi_infinite():
    r = integrate_finite(lambda x: math.exp(-x) / math.sqrt(-math.expm1(-x)), 0.0, math.inf)
    check(r, 2.0)


@pytest.mark.parametrize(
    "f, exact",
    [
        (lambda x: math.exp(-x), 1.0),
        (lambda x: 3.0 * math.exp(-6.0 * x), 0.5),
        (lambda x: math.exp(-x) * (1 / math.sqrt(-math.expm1(-x)) - 1), 1.0),
    ],
    ids=["exp", "exp-omega-3", "singular-minus-regular"],
)
def test_semi_infinite_examples(f, exact):
    check(integrate_semi_infinite(f, 0.0), exact)


@pytest.mark.parametrize("s", [-0.5, 0.0, 0.5, 1.0, 2.0])
def test_gamma_moments(s):
    r = integrate_semi_infinite(lambda x: math.exp(-x) * x ** s, 0.0)
    assert r.value == pytest.approx(math.gamma(1 + s), rel=1e-10)


@pytest.mark.parametrize("omega", [1e-5, 1e-3, 1.0, 354.0])
def test_decay_scales(omega):
    r = integrate_semi_infinite(lambda x: omega * math.exp(-2 * omega * x), 0.0)
    assert r.value == pytest.approx(0.5, rel=1e-12)


# These integrands rebuild the distance to the singular endpoint from x, so
# the mass within one ulp of it, 2 sqrt(ulp), is out of reach.
def test_shifted_left_endpoint():
    r = integrate_semi_infinite(lambda x: math.exp(-(x - 2.0)) / math.sqrt(x - 2.0), 2.0)
    assert abs(r.value - math.sqrt(math.pi)) <= 2 * math.sqrt(math.ulp(2.0))


def test_right_endpoint_singularity():
    r = integrate_finite(lambda x: 1 / math.sqrt(1 - x), 0.0, 1.0)
    assert abs(r.value - 2.0) <= 2 * math.sqrt(math.ulp(1.0))


def test_walk_reaches_collapsed_endpoint():
    # regression: the walk used to stop one step short of the collapsed
    # node and drop everything within ~1e-7 of the endpoint
    r = integrate_finite(lambda x: 1 / math.sqrt(x - 1), 1.0, 2.0)
    assert abs(r.value - 2.0) <= 2 * math.sqrt(math.ulp(1.0))


@settings(max_examples=50, deadline=None)
@given(
    st.floats(min_value=-100, max_value=100).filter(lambda c: abs(c) > 1e-3),
    st.lists(st.floats(min_value=-5, max_value=5), min_size=1, max_size=5),
)
def test_linearity(c, coeffs):
    def poly(x):
        return sum(a * x ** k for k, a in enumerate(coeffs))

    base = integrate_finite(poly, -1.0, 2.0).value
    scaled = integrate_finite(lambda x: c * poly(x), -1.0, 2.0).value
    scale = sum(abs(a) * 2 ** k for k, a in enumerate(coeffs)) * 3
    assert abs(scaled - c * base) <= 1e-12 * max(abs(c * base), abs(c) * scale)


def test_deterministic():
    f = lambda x: math.exp(-x) * x ** -0.5  # noqa: E731
    assert integrate_semi_infinite(f, 0.0) == integrate_semi_infinite(f, 0.0)
    g = lambda t: math.cos(t) ** 2  # noqa: E731
    assert integrate_finite(g, 0.0, 3.0) == integrate_finite(g, 0.0, 3.0)


def test_nan_integrand_raises():
    with pytest.raises(IntegrandError):
        integrate_finite(lambda x: math.nan, 0.0, 1.0)


def test_budget_exhaustion_carries_best_estimate():
    tol = Tolerance(abs_tol=1e-15, rel_tol=1e-15, max_evaluations=40)
    with pytest.raises(ConvergenceError) as info:
        integrate_finite(lambda x: math.sin(50 * x) ** 2, 0.0, 1.0, tol)
    assert info.value.best is not None
    assert math.isfinite(info.value.best.value)


@pytest.mark.parametrize("a, b", [(1.0, 1.0), (2.0, 1.0), (-math.inf, 0.0), (math.nan, 1.0)])
def test_bad_interval(a, b):
    with pytest.raises(DomainError):
        integrate_finite(lambda x: 1.0, a, b)


def test_tolerance_validation():
    with pytest.raises(DomainError):
        Tolerance(abs_tol=0.0, rel_tol=0.0)
    with pytest.raises(DomainError):
        Tolerance(max_evaluations=0)
    assert DEFAULT_TOLERANCE == Tolerance(1e-12, 1e-10, 10 ** 6)
