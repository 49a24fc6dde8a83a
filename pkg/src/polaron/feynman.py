"""Feynman's two-parameter variational model of the polaron.

With ``D(t) = w^2 t + (v^2 - w^2)/v * (1 - exp(-v t))``::

    E(v, w) = 3 (v - w)^2 / (4 v) - (alpha v / sqrt(pi)) int_0^inf e^-t D^-1/2 dt
    m(v, w) = 1 + (alpha v^3 / (3 sqrt(pi))) int_0^inf t^2 e^-t D^-3/2 dt

``E`` is minimized over ``v >= w > 0`` and ``m`` is evaluated at the
minimizer.  The integrals go through :mod:`polaron.kernels` (compiled when
available).

The (v, w) landscape has a weak-coupling basin near ``v ~ w ~ 3`` and a
strong-coupling one with ``v ~ 4 alpha^2 / (9 pi)``, ``w ~ 1``.  The
minimizer starts from both and keeps the lower energy, so ``E(alpha)`` stays
smooth through the crossover near alpha ~ 5-7.

:func:`grid_oracle` is an independent check of the minimizer: brute-force
evaluation on a dense (v, w) grid with a fixed Gauss-Legendre rule in
``s = sqrt(t)``, followed by two rounds of local grid refinement.
"""
import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kernels import ENERGY, MASS, feynman_integral
from .optimize import MinimizeOptions, minimize
from .quadrature import DEFAULT_TOLERANCE

__all__ = [
    "FeynmanParams",
    "FeynmanResult",
    "GridOracleResult",
    "DEFAULT_MINIMIZE_OPTIONS",
    "feynman_energy",
    "feynman_mass",
    "feynman_minimize",
    "weak_seed",
    "strong_seed",
    "grid_energy",
    "grid_oracle",
]

SQRT_PI = math.sqrt(math.pi)

DEFAULT_MINIMIZE_OPTIONS = MinimizeOptions(
    initial_point=(0.0, 0.0),
    initial_scale=0.5,
    f_tol=1e-12,
    x_tol=1e-8,
    max_iterations=4000,
    restarts=2,
)


@dataclass(frozen=True)
class FeynmanParams:
    v: float
    w: float

    def __post_init__(self):
        if not (self.w > 0.0 and math.isfinite(self.v)):
            raise DomainError(f"need finite v >= w > 0, got v={self.v!r}, w={self.w!r}")
        if self.v < self.w:
            raise DomainError(f"need v >= w, got v={self.v!r}, w={self.w!r}")


@dataclass(frozen=True)
class FeynmanResult:
    alpha: float
    params: FeynmanParams
    energy: float
    mass: float
    converged: bool
    iterations: int = 0


def _check_alpha(alpha):
    alpha = float(alpha)
    if not alpha >= 0.0 or math.isinf(alpha):
        raise DomainError(f"alpha must be finite and >= 0, got {alpha!r}")
    return alpha


def feynman_energy(alpha, p, tol=DEFAULT_TOLERANCE):
    """Variational energy at parameters ``p``.  Exactly ``-alpha`` when v = w."""
    alpha = _check_alpha(alpha)
    integral = feynman_integral(ENERGY, p.v, p.w, tol).value
    return 3.0 * (p.v - p.w) ** 2 / (4.0 * p.v) - alpha * p.v / SQRT_PI * integral


def feynman_mass(alpha, p, tol=DEFAULT_TOLERANCE):
    """Effective mass at parameters ``p``.  Equals ``1 + alpha/6`` when v = w."""
    alpha = _check_alpha(alpha)
    integral = feynman_integral(MASS, p.v, p.w, tol).value
    return 1.0 + alpha * p.v ** 3 / (3.0 * SQRT_PI) * integral


def weak_seed(alpha):
    return FeynmanParams(3.1, 2.9)


def strong_seed(alpha):
    return FeynmanParams(1.0 + 4.0 * alpha * alpha / (9.0 * math.pi), 1.0)


def _to_internal(p):
    return (math.log(p.w), math.log(p.v - p.w))


def _from_internal(x):
    w = math.exp(x[0])
    return FeynmanParams(w + math.exp(x[1]), w)


def feynman_minimize(alpha, opts=None, tol=DEFAULT_TOLERANCE, seeds=None):
    """Minimize the variational energy over ``v > w > 0``.

    The search runs in ``(ln w, ln(v - w))`` so every trial point is valid.
    ``opts`` supplies the Nelder-Mead settings; its ``initial_point`` is
    replaced by each seed in turn.  ``seeds`` defaults to the weak- and
    strong-coupling guesses, and the lowest energy wins (ties go to the
    earlier seed).
    """
    alpha = _check_alpha(alpha)
    if alpha == 0.0:
        # E = 3 (v - w)^2 / 4v >= 0 with the minimum on the whole line v = w
        p = FeynmanParams(3.0, 3.0)
        return FeynmanResult(alpha, p, 0.0, 1.0, True, 0)
    opts = opts or DEFAULT_MINIMIZE_OPTIONS
    if seeds is None:
        seeds = (weak_seed(alpha), strong_seed(alpha))

    def objective(x):
        try:
            return feynman_energy(alpha, _from_internal(x), tol)
        except (ArithmeticError, DomainError):
            return math.inf

    best = None
    iterations = 0
    for seed in seeds:
        if seed.v == seed.w:
            seed = FeynmanParams(seed.v * (1.0 + 1e-3), seed.w)
        run = minimize(objective, dataclasses.replace(opts, initial_point=_to_internal(seed)))
        iterations += run.iterations
        if best is None or run.f_min < best.f_min:
            best = run
    params = _from_internal(best.x_min)
    return FeynmanResult(
        alpha=alpha,
        params=params,
        energy=best.f_min,
        mass=feynman_mass(alpha, params, tol),
        converged=best.converged,
        iterations=iterations,
    )


# -- brute-force grid oracle ------------------------------------------------

def _legendre_rule(panels=10, points=12, s_max=6.5):
    x, wt = np.polynomial.legendre.leggauss(points)
    edges = np.linspace(0.0, s_max, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    s = (half[:, None] * x[None, :] + mid[:, None]).ravel()
    ws = (half[:, None] * wt[None, :]).ravel()
    return s, ws


_S, _WS = _legendre_rule()


def grid_energy(alpha, v, w):
    """Vectorized variational energy, independent of :mod:`polaron.quadrature`.

    After ``t = s^2`` the energy integral is
    ``int_0^inf 2 e^{-s^2} [w^2 + c (1 - e^{-v s^2}) / s^2]^{-1/2} ds`` with
    ``c = (v^2 - w^2)/v``, a smooth integrand handled by composite
    Gauss-Legendre on ``[0, 6.5]``.  ``v`` and ``w`` broadcast.
    """
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    c = (v * v - w * w) / v
    s2 = _S * _S
    g = (w * w)[..., None] + c[..., None] * (-np.expm1(-v[..., None] * s2)) / s2
    integral = np.sum(_WS * 2.0 * np.exp(-s2) / np.sqrt(g), axis=-1)
    return 3.0 * (v - w) ** 2 / (4.0 * v) - alpha * v / SQRT_PI * integral


@dataclass(frozen=True)
class GridOracleResult:
    alpha: float
    grid_params: FeynmanParams
    grid_energy: float
    refined_params: FeynmanParams
    refined_energy: float
    on_boundary: bool


def _grid_min(alpha, v_axis, w_axis, chunk=64):
    best = (math.inf, 0, 0)
    for start in range(0, len(v_axis), chunk):
        vv, ww = np.meshgrid(v_axis[start:start + chunk], w_axis, indexing="ij")
        valid = vv >= ww
        if not valid.any():
            continue
        e = np.full(vv.shape, np.inf)
        e[valid] = grid_energy(alpha, vv[valid], ww[valid])
        i, j = np.unravel_index(np.argmin(e), e.shape)
        if e[i, j] < best[0]:
            best = (float(e[i, j]), start + i, j)
    return best


def grid_oracle(alpha, v_range=(1.0, 8.0), w_range=(1.0, 8.0), step=0.01, refinements=2):
    """Minimize the variational energy by exhaustive search.

    The coarse grid covers ``v_range x w_range`` (restricted to v >= w) at
    ``step``; each refinement searches +-1 coarse step around the current
    best at a step 100 times finer.  ``on_boundary`` flags a coarse
    minimum on the edge of the window, in which case the window was too
    small.
    """
    alpha = _check_alpha(alpha)
    v_axis = np.arange(round((v_range[1] - v_range[0]) / step) + 1) * step + v_range[0]
    w_axis = np.arange(round((w_range[1] - w_range[0]) / step) + 1) * step + w_range[0]
    e, i, j = _grid_min(alpha, v_axis, w_axis)
    coarse = FeynmanParams(float(v_axis[i]), float(w_axis[j]))
    on_boundary = i in (0, len(v_axis) - 1) or j in (0, len(w_axis) - 1)

    v0, w0, h, e_ref = coarse.v, coarse.w, step, e
    for _ in range(refinements):
        fine = h / 100.0
        offsets = np.arange(-100, 101) * fine
        v_axis_f = v0 + offsets
        w_axis_f = w0 + offsets[w0 + offsets > 0]
        e_ref, i, j = _grid_min(alpha, v_axis_f, w_axis_f)
        v0, w0, h = float(v_axis_f[i]), float(w_axis_f[j]), fine
    return GridOracleResult(alpha, coarse, e, FeynmanParams(v0, w0), e_ref, bool(on_boundary))
