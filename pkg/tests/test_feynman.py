import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polaron import feynman as F
from polaron.errors import DomainError
from polaron.feynman import FeynmanParams

mpmath.mp.dps = 30

# refined grid-oracle minima, frozen (window (1, 8)^2 except alpha = 11)
GRID_MINIMA = {
    1.0: -1.0130308352645119,
    3.0: -3.1333335443170687,
    5.0: -5.44014449942092,
    6.0: -6.710870982791425,
    7.0: -8.112687538114784,
    11.0: -15.709808454966694,
}


def mp_energy(alpha, v, w):
    v, w = mpmath.mpf(v), mpmath.mpf(w)
    c = (v * v - w * w) / v

    def g(s):
        # t = s^2 removes the t^-1/2 endpoint singularity
        t = s * s
        return 2 * s * mpmath.exp(-t) / mpmath.sqrt(w * w * t + c * (1 - mpmath.exp(-v * t)))

    integral = mpmath.quad(g, [0, 1, 3, mpmath.inf])
    return float(3 * (v - w) ** 2 / (4 * v) - alpha * v / mpmath.sqrt(mpmath.pi) * integral)


def mp_mass(alpha, v, w):
    v, w = mpmath.mpf(v), mpmath.mpf(w)
    c = (v * v - w * w) / v

    def f(t):
        d = w * w * t + c * (1 - mpmath.exp(-v * t))
        return t * t * mpmath.exp(-t) / d ** mpmath.mpf(1.5)

    integral = mpmath.quad(f, [0, 1, 10, mpmath.inf])
    return float(1 + alpha * v ** 3 / (3 * mpmath.sqrt(mpmath.pi)) * integral)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.0, max_value=100.0), st.floats(min_value=0.05, max_value=50.0))
def test_energy_at_v_equal_w_is_minus_alpha(alpha, w):
    assert F.feynman_energy(alpha, FeynmanParams(w, w)) == pytest.approx(-alpha, abs=1e-10, rel=1e-10)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.0, max_value=100.0), st.floats(min_value=0.05, max_value=50.0))
def test_mass_at_v_equal_w(alpha, w):
    assert F.feynman_mass(alpha, FeynmanParams(w, w)) == pytest.approx(1 + alpha / 6, abs=1e-9, rel=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.1, max_value=20.0), st.floats(min_value=0.0, max_value=20.0))
def test_zero_coupling_energy(w, gap):
    p = FeynmanParams(w + gap, w)
    e = F.feynman_energy(0.0, p)
    assert e == pytest.approx(3 * (p.v - p.w) ** 2 / (4 * p.v), rel=1e-15, abs=1e-300)
    assert e >= 0.0
    assert F.feynman_mass(0.0, p) == 1.0


def test_energy_reference_point():
    e = F.feynman_energy(5.0, FeynmanParams(4.02, 2.13))
    assert e == pytest.approx(-5.44, abs=5e-3)
    assert e == pytest.approx(-5.4401419667766593, rel=1e-12)


@pytest.mark.parametrize(
    "alpha, v, w",
    [(0.5, 3.2, 2.9), (1.0, 3.11, 2.87), (3.0, 6.0, 1.5), (7.0, 5.81, 1.6), (11.0, 15.4, 1.16), (50.0, 300.0, 1.1)],
)
def test_energy_and_mass_against_mpmath(alpha, v, w):
    p = FeynmanParams(v, w)
    assert F.feynman_energy(alpha, p) == pytest.approx(mp_energy(alpha, v, w), rel=1e-10)
    assert F.feynman_mass(alpha, p) == pytest.approx(mp_mass(alpha, v, w), rel=1e-9)


@settings(max_examples=40, deadline=None)
@given(
    st.floats(min_value=0.1, max_value=20.0),
    st.floats(min_value=0.2, max_value=5.0),
    st.floats(min_value=0.0, max_value=10.0),
)
def test_grid_energy_matches_quadrature(alpha, w, gap):
    v = w + gap
    assert float(F.grid_energy(alpha, v, w)) == pytest.approx(
        F.feynman_energy(alpha, FeynmanParams(v, w)), rel=1e-10, abs=1e-12
    )


def test_grid_energy_broadcasts():
    v = np.array([[3.0, 4.0], [5.0, 6.0]])
    e = F.grid_energy(2.0, v, np.full_like(v, 2.0))
    assert e.shape == (2, 2)
    assert e[1, 0] == pytest.approx(float(F.grid_energy(2.0, 5.0, 2.0)), rel=1e-15)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0, 5.0])
def test_minimum_is_variational(alpha):
    result = F.feynman_minimize(alpha)
    rng = np.random.default_rng(int(alpha * 10))
    for _ in range(20):
        w = rng.uniform(0.5, 6.0)
        v = w + rng.uniform(0.0, 6.0)
        assert result.energy <= F.feynman_energy(alpha, FeynmanParams(v, w)) + 1e-12


@pytest.mark.parametrize("alpha", sorted(GRID_MINIMA))
def test_minimizer_matches_grid_oracle(alpha):
    r = F.feynman_minimize(alpha)
    assert r.converged
    assert r.energy <= GRID_MINIMA[alpha] + 1e-9
    assert r.energy == pytest.approx(GRID_MINIMA[alpha], abs=1e-8)


def test_alpha_one():
    r = F.feynman_minimize(1.0)
    assert r.energy == pytest.approx(-1.013, abs=5e-4)
    assert r.params.v == pytest.approx(3.1096, abs=1e-3)
    assert r.params.w == pytest.approx(2.8707, abs=1e-3)
    assert r.mass == pytest.approx(1.19551, abs=1e-4)


def test_alpha_eleven():
    r = F.feynman_minimize(11.0)
    # between the weak value -1/alpha and the strong coefficient -0.106
    assert r.energy / 11.0 ** 2 == pytest.approx(-0.12983, abs=1e-4)


def test_alpha_six_mass():
    r = F.feynman_minimize(6.0)
    # mass at the refined grid-oracle parameters, by independent quadrature
    assert r.mass == pytest.approx(6.8383575935546315, rel=1e-5)


@pytest.mark.parametrize("alpha", [4.0, 5.0, 6.0])
def test_each_seed_reaches_the_same_minimum(alpha):
    weak = F.feynman_minimize(alpha, seeds=(F.weak_seed(alpha),))
    strong = F.feynman_minimize(alpha, seeds=(F.strong_seed(alpha),))
    assert weak.energy == pytest.approx(strong.energy, abs=1e-6)


def test_weak_limit():
    alpha = 1e-2
    r = F.feynman_minimize(alpha)
    assert r.energy / alpha == pytest.approx(-1.0, abs=1e-3)
    assert (r.mass - 1) / alpha == pytest.approx(1 / 6, rel=1e-2)


def test_strong_limit():
    alpha = 50.0
    r = F.feynman_minimize(alpha)
    assert -0.109 <= r.energy / alpha ** 2 <= -0.104


def test_zero_coupling_result():
    r = F.feynman_minimize(0.0)
    assert (r.energy, r.mass, r.converged) == (0.0, 1.0, True)
    assert r.params.v == r.params.w


def test_deterministic():
    assert F.feynman_minimize(3.0) == F.feynman_minimize(3.0)


def test_grid_oracle_small_window():
    res = F.grid_oracle(1.0, v_range=(2.5, 3.5), w_range=(2.5, 3.5))
    assert not res.on_boundary
    assert res.refined_energy <= res.grid_energy
    assert res.refined_energy == pytest.approx(GRID_MINIMA[1.0], abs=1e-6)


def test_grid_oracle_flags_boundary():
    res = F.grid_oracle(11.0, v_range=(1.0, 4.0), w_range=(1.0, 4.0), step=0.05)
    assert res.on_boundary


@pytest.mark.parametrize("v, w", [(1.0, 2.0), (1.0, 0.0), (math.inf, 1.0), (math.nan, 1.0), (1.0, -1.0)])
def test_params_validation(v, w):
    with pytest.raises(DomainError):
        FeynmanParams(v, w)


@pytest.mark.parametrize("bad", [-1.0, math.nan, math.inf])
def test_alpha_validation(bad):
    with pytest.raises(DomainError):
        F.feynman_minimize(bad)
    with pytest.raises(DomainError):
        F.feynman_energy(bad, FeynmanParams(3.0, 2.0))
