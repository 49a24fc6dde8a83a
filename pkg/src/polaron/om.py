"""Closed-form operator-method results for the Froehlich polaron.

Energies are in units of the phonon frequency, masses in units of the band
mass (hbar = m = omega_LO = 1).  Every function accepts ``alpha = 0`` and
returns the continuous limit there (zero energy, unit mass) instead of
forming 1/omega.
"""
import math
from dataclasses import dataclass

from .errors import DomainError
from .special import log_gamma_ratio

__all__ = [
    "CouplingPoint",
    "EnergyBreakdown",
    "MassBreakdown",
    "I2_CONSTANT",
    "ENERGY_BRACKET",
    "STRONG_COEFFICIENT",
    "STRONG_CONSTANTS",
    "STRONG_CONSTANT_DERIVED",
    "STRONG_CONSTANT_QUOTED",
    "WEAK_COEFFICIENT_QUOTED",
    "WEAK_COEFFICIENT_EXACT",
    "coupling_point",
    "omega_of_alpha",
    "e0_zeroth",
    "i1_closed",
    "i2_closed",
    "i3_closed",
    "ground_state_energy",
    "weak_asymptote",
    "strong_asymptote",
    "fit_strong_constant",
    "effective_mass",
]

SQRT_PI = math.sqrt(math.pi)
LN2 = math.log(2.0)

# int_0^1 [2 arcsin(t/2)/t^2 - 1/t] dt
I2_CONSTANT = -math.pi / 3.0 + 1.0 + 2.0 * LN2 - math.log(2.0 + math.sqrt(3.0))

# E = -(alpha^2 / 3 pi) * ENERGY_BRACKET - I1; the bracket collects the
# zeroth order term, I2 and I3.
ENERGY_BRACKET = (
    13.0 + 24.0 * LN2 - 4.0 * math.pi - 12.0 * math.log(2.0 + math.sqrt(3.0)) - 0.25
)
STRONG_COEFFICIENT = -ENERGY_BRACKET / (3.0 * math.pi)

# Constant term of the alpha -> inf expansion.  The derived value follows from
# I1 -> 3 ln 2; the quoted -0.75 is kept for comparison only.
STRONG_CONSTANT_DERIVED = -3.0 * LN2
STRONG_CONSTANT_QUOTED = -0.75
STRONG_CONSTANTS = {
    "derived (expansion of the closed-form energy)": STRONG_CONSTANT_DERIVED,
    "quoted with the strong-coupling formula": STRONG_CONSTANT_QUOTED,
}

WEAK_COEFFICIENT_QUOTED = 0.1044
# exact alpha^2 coefficient of the small-alpha expansion of the energy
WEAK_COEFFICIENT_EXACT = (5.0 / 12.0 - 4.0 * I2_CONSTANT) / math.pi


@dataclass(frozen=True)
class CouplingPoint:
    alpha: float
    omega: float


@dataclass(frozen=True)
class EnergyBreakdown:
    alpha: float
    e0_zeroth: float
    i1: float
    i2: float
    i3: float
    total: float


@dataclass(frozen=True)
class MassBreakdown:
    """Effective mass and its parts; ``excess`` is ``total - 1`` without the
    cancellation of subtracting 1 from ``total`` at small alpha."""

    alpha: float
    m_zeroth: float
    m_correction: float
    total: float
    excess: float


def _check_alpha(alpha):
    alpha = float(alpha)
    if not alpha >= 0.0 or math.isinf(alpha):
        raise DomainError(f"alpha must be finite and >= 0, got {alpha!r}")
    return alpha


def omega_of_alpha(alpha):
    """Frequency that diagonalizes the zeroth-order Hamiltonian, 4 alpha^2 / 9 pi."""
    alpha = _check_alpha(alpha)
    return 4.0 * alpha * alpha / (9.0 * math.pi)


def coupling_point(alpha):
    return CouplingPoint(float(alpha), omega_of_alpha(alpha))


def e0_zeroth(alpha):
    alpha = _check_alpha(alpha)
    return -alpha * alpha / (3.0 * math.pi)


# Below this omega the expansion alpha * (1 - sqrt(omega/pi)) of I1 is exact
# in double precision; it also avoids 1/omega overflowing for tiny alpha.
_WEAK_OMEGA = 1e-30


def _i1(alpha, omega):
    if omega < _WEAK_OMEGA:
        return alpha * (1.0 - math.sqrt(omega / math.pi))
    # sqrt(pi) Gamma(1 + 1/w) / Gamma(1/2 + 1/w) - 1, through expm1 so the
    # strong-coupling limit (factor -> 0) keeps its relative accuracy
    factor = math.expm1(log_gamma_ratio(1.0 / omega) + 0.5 * math.log(math.pi))
    return alpha * math.sqrt(omega / math.pi) * factor


def i1_closed(alpha):
    """Phonon-emission part of the second-order correction.

    ``alpha * sqrt(omega/pi) * (sqrt(pi) Gamma(1+1/omega)/Gamma(1/2+1/omega) - 1)``
    which tends to ``alpha`` at weak coupling and to ``3 ln 2`` at strong
    coupling.
    """
    alpha = _check_alpha(alpha)
    if alpha == 0.0:
        return 0.0
    return _i1(alpha, omega_of_alpha(alpha))


def i2_closed(alpha):
    alpha = _check_alpha(alpha)
    return 4.0 * alpha * alpha / math.pi * I2_CONSTANT


def i3_closed(alpha):
    alpha = _check_alpha(alpha)
    return -alpha * alpha / (12.0 * math.pi)


def ground_state_energy(alpha):
    """Ground-state energy through second order, with its decomposition.

    ``total`` is evaluated from the collected formula
    ``-(alpha^2/3pi) * ENERGY_BRACKET - I1`` rather than by summing the parts,
    so the breakdown identity ``total = e0_zeroth - (i1 + i2 + i3)`` is a
    genuine check.
    """
    alpha = _check_alpha(alpha)
    if alpha == 0.0:
        return EnergyBreakdown(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    total = -alpha * alpha / (3.0 * math.pi) * ENERGY_BRACKET - _i1(alpha, omega_of_alpha(alpha))
    return EnergyBreakdown(
        alpha=alpha,
        e0_zeroth=e0_zeroth(alpha),
        i1=i1_closed(alpha),
        i2=i2_closed(alpha),
        i3=i3_closed(alpha),
        total=total,
    )


def weak_asymptote(alpha, coefficient=WEAK_COEFFICIENT_QUOTED):
    alpha = _check_alpha(alpha)
    return -alpha + coefficient * alpha * alpha


def strong_asymptote(alpha, constant=STRONG_CONSTANT_DERIVED):
    """Large-alpha form ``STRONG_COEFFICIENT * alpha^2 + constant``.

    ``constant`` defaults to -3 ln 2, the value the closed-form energy
    actually tends to; pass ``STRONG_CONSTANT_QUOTED`` for the quoted -0.75.
    """
    alpha = _check_alpha(alpha)
    return STRONG_COEFFICIENT * alpha * alpha + constant


def fit_strong_constant(alpha):
    """Residual ``E(alpha) - STRONG_COEFFICIENT * alpha^2`` at large alpha."""
    alpha = _check_alpha(alpha)
    return ground_state_energy(alpha).total - STRONG_COEFFICIENT * alpha * alpha


def effective_mass(alpha):
    alpha = _check_alpha(alpha)
    a2 = alpha * alpha
    zeroth_excess = 16.0 * a2 * a2 / (81.0 * math.pi ** 2)
    m_correction = 2.0 * a2 / (9.0 * math.pi)
    excess = zeroth_excess + m_correction
    return MassBreakdown(alpha, 1.0 + zeroth_excess, m_correction, 1.0 + excess, excess)
