"""Quadrature checks of the operator-method closed forms.

Each ``*_numeric`` function integrates the one-dimensional integrand that the
corresponding closed form was obtained from.  The three-dimensional k-space
reductions that lead to those integrands are taken as given.
"""
import math
from dataclasses import dataclass
from typing import Optional

from . import om
from .errors import DomainError
from .quadrature import (
    DEFAULT_TOLERANCE,
    QuadratureResult,
    integrate_finite,
    integrate_semi_infinite,
)

__all__ = [
    "OracleReport",
    "THRESHOLDS",
    "QUANTITIES",
    "arcsin_excess",
    "i1_numeric",
    "i2_numeric",
    "i2_bare_numeric",
    "i3_numeric",
    "second_order_numeric",
    "verify_all",
]

QUANTITIES = ("I1", "I2", "I3", "E2", "E0")
THRESHOLDS = {"I1": 1e-8, "I2": 1e-8, "I3": 1e-8, "E2": 1e-7, "E0": 1e-7}

_REL_FLOOR = 1e-300


@dataclass(frozen=True)
class OracleReport:
    name: str
    alpha: float
    closed_value: float
    numeric_value: float
    abs_diff: float
    rel_diff: float
    quad: Optional[QuadratureResult]
    error: Optional[str] = None

    @property
    def passed(self):
        return self.error is None and self.rel_diff <= THRESHOLDS.get(self.name, 0.0)


def _report(name, alpha, closed, quad):
    numeric = quad.value
    diff = abs(closed - numeric)
    return OracleReport(name, alpha, closed, numeric, diff, diff / max(abs(closed), _REL_FLOOR), quad)


def _scaled(quad, factor):
    return QuadratureResult(factor * quad.value, abs(factor) * quad.abs_err, quad.evaluations)


def _positive(alpha):
    alpha = float(alpha)
    if not alpha > 0.0 or math.isinf(alpha):
        raise DomainError(f"alpha must be positive, got {alpha!r}")
    return alpha


def arcsin_excess(t):
    """``2 arcsin(t/2)/t - 1`` for 0 <= t <= 1, without cancellation near 0.

    For small ``t`` the Maclaurin series of ``arcsin(y)/y - 1`` in
    ``y = t/2`` is summed until the terms drop below rounding.
    """
    y = 0.5 * t
    if y > 0.25:
        return math.asin(y) / y - 1.0
    y2 = y * y
    term = y2 / 6.0  # n = 1 coefficient (2n)! / (4^n n!^2 (2n+1))
    total = 0.0
    n = 1
    while term > 1e-17 * total or n == 1:
        total += term
        # c_{n+1} / c_n = (2n+1)^2 / (2 (n+1) (2n+3))
        term *= y2 * (2 * n + 1) ** 2 / (2.0 * (n + 1) * (2 * n + 3))
        n += 1
    return total


def _i1_integrand(omega):
    def f(x):
        return math.exp(-x) * (1.0 / math.sqrt(-math.expm1(-omega * x)) - 1.0)

    return f


def i1_numeric(alpha, tol=DEFAULT_TOLERANCE):
    alpha = _positive(alpha)
    omega = om.omega_of_alpha(alpha)
    quad = integrate_semi_infinite(_i1_integrand(omega), 0.0, tol)
    return _scaled(quad, alpha * math.sqrt(omega / math.pi))


def i2_bare_numeric(tol=DEFAULT_TOLERANCE):
    """``int_0^1 [2 arcsin(t/2)/t^2 - 1/t] dt`` by quadrature."""
    return integrate_finite(lambda t: arcsin_excess(t) / t, 0.0, 1.0, tol)


def i2_numeric(alpha, tol=DEFAULT_TOLERANCE):
    alpha = float(alpha)
    if not alpha >= 0.0:
        raise DomainError(f"alpha must be >= 0, got {alpha!r}")
    return _scaled(i2_bare_numeric(tol), 4.0 * alpha * alpha / math.pi)


def i3_numeric(alpha, tol=DEFAULT_TOLERANCE):
    alpha = _positive(alpha)
    omega = om.omega_of_alpha(alpha)
    quad = integrate_semi_infinite(lambda x: omega * math.exp(-2.0 * omega * x), 0.0, tol)
    return _scaled(quad, -alpha * alpha / (6.0 * math.pi))


def second_order_numeric(alpha, tol=DEFAULT_TOLERANCE):
    """Minus the second-order energy correction as a single x-integral.

    The integrand is the sum of the three reduced matrix-element terms,
    with ``t = exp(-omega x)``::

        alpha sqrt(omega/pi) (1/sqrt(1 - t) - 1) e^-x
        + (4 alpha^2 / pi) omega (2 arcsin(t/2)/t - 1)
        - (alpha^2 / 6 pi) omega t^2
    """
    alpha = _positive(alpha)
    omega = om.omega_of_alpha(alpha)
    c1 = alpha * math.sqrt(omega / math.pi)
    c2 = 4.0 * alpha * alpha / math.pi * omega
    c3 = alpha * alpha / (6.0 * math.pi) * omega

    def f(x):
        t = math.exp(-omega * x)
        emission = math.exp(-x) * (1.0 / math.sqrt(-math.expm1(-omega * x)) - 1.0)
        return c1 * emission + c2 * arcsin_excess(t) - c3 * t * t

    return integrate_semi_infinite(f, 0.0, tol)


def _checks(alpha, tol):
    # (name, closed value, callable returning the quadrature)
    energy = om.ground_state_energy(alpha)
    closed_e2 = energy.i1 + energy.i2 + energy.i3

    def e0_quad():
        q = second_order_numeric(alpha, tol)
        return QuadratureResult(energy.e0_zeroth - q.value, q.abs_err, q.evaluations)

    return (
        ("I1", energy.i1, lambda: i1_numeric(alpha, tol)),
        ("I2", energy.i2, lambda: i2_numeric(alpha, tol)),
        ("I3", energy.i3, lambda: i3_numeric(alpha, tol)),
        ("E2", closed_e2, lambda: second_order_numeric(alpha, tol)),
        ("E0", energy.total, e0_quad),
    )


def verify_all(alpha_grid, tol=DEFAULT_TOLERANCE):
    """Compare every closed form with its quadrature on a grid of couplings.

    Reports come out quantity-major (I1 for every alpha, then I2, ...).  A
    failing quadrature becomes a report with ``error`` set instead of
    aborting the batch.
    """
    grid = [float(a) for a in alpha_grid]
    if not grid:
        raise DomainError("alpha grid must be nonempty")
    for a in grid:
        _positive(a)
    per_alpha = []
    for a in grid:
        rows = {}
        for name, closed, run in _checks(a, tol):
            try:
                rows[name] = _report(name, a, closed, run())
            except ArithmeticError as exc:
                rows[name] = OracleReport(name, a, closed, math.nan, math.nan, math.nan, None, str(exc))
        per_alpha.append(rows)
    return [rows[name] for name in QUANTITIES for rows in per_alpha]
