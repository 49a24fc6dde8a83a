"""Nelder-Mead simplex minimization with deterministic restarts."""
import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError

__all__ = ["MinimizeOptions", "MinimizeResult", "minimize"]

_REFLECT = 1.0
_EXPAND = 2.0
_CONTRACT = 0.5
_SHRINK = 0.5


@dataclass(frozen=True)
class MinimizeOptions:
    initial_point: Sequence[float]
    initial_scale: float = 0.5
    f_tol: float = 1e-12
    x_tol: float = 1e-8
    max_iterations: int = 5000
    restarts: int = 2

    def __post_init__(self):
        if len(self.initial_point) == 0:
            raise DomainError("initial_point must be nonempty")
        if self.initial_scale <= 0 or self.f_tol <= 0 or self.x_tol <= 0:
            raise DomainError("initial_scale, f_tol and x_tol must be positive")
        if self.max_iterations < 1 or self.restarts < 0:
            raise DomainError("max_iterations must be positive, restarts nonnegative")


@dataclass(frozen=True)
class MinimizeResult:
    x_min: tuple
    f_min: float
    iterations: int
    converged: bool
    evaluations: int = field(default=0, compare=False)


def _order(simplex, values):
    # ties broken by vertex index, so ordering is fully deterministic
    idx = sorted(range(len(values)), key=lambda i: (values[i], i))
    return [simplex[i] for i in idx], [values[i] for i in idx]


def _converged(simplex, values, f_tol, x_tol):
    best = simplex[0]
    diam = max(max(abs(p - q) for p, q in zip(v, best)) for v in simplex[1:])
    spread = values[-1] - values[0]
    return diam <= x_tol and spread <= f_tol


def _nelder_mead(f, x0, scale, f_tol, x_tol, max_iterations):
    n = len(x0)
    simplex = [list(x0)]
    for i in range(n):
        v = list(x0)
        v[i] += scale
        simplex.append(v)
    values = [f(v) for v in simplex]
    evals = n + 1
    simplex, values = _order(simplex, values)

    for it in range(1, max_iterations + 1):
        best, worst = simplex[0], simplex[-1]
        centroid = [sum(v[k] for v in simplex[:-1]) / n for k in range(n)]
        xr = [c + _REFLECT * (c - w) for c, w in zip(centroid, worst)]
        fr = f(xr)
        evals += 1
        if fr < values[0]:
            xe = [c + _EXPAND * (r - c) for c, r in zip(centroid, xr)]
            fe = f(xe)
            evals += 1
            if fe < fr:
                simplex[-1], values[-1] = xe, fe
            else:
                simplex[-1], values[-1] = xr, fr
        elif fr < values[-2]:
            simplex[-1], values[-1] = xr, fr
        else:
            if fr < values[-1]:
                # outside contraction
                xc = [c + _CONTRACT * (r - c) for c, r in zip(centroid, xr)]
                fc = f(xc)
                evals += 1
                accept = fc <= fr
            else:
                xc = [c + _CONTRACT * (w - c) for c, w in zip(centroid, worst)]
                fc = f(xc)
                evals += 1
                accept = fc < values[-1]
            if accept:
                simplex[-1], values[-1] = xc, fc
            else:
                for i in range(1, n + 1):
                    simplex[i] = [b + _SHRINK * (v - b) for b, v in zip(best, simplex[i])]
                    values[i] = f(simplex[i])
                evals += n
        simplex, values = _order(simplex, values)
        if _converged(simplex, values, f_tol, x_tol):
            return simplex[0], values[0], it, True, evals
    return simplex[0], values[0], max_iterations, False, evals


def minimize(f, opts):
    """Minimize ``f`` from ``opts.initial_point`` with Nelder-Mead.

    After the first run, each restart builds a fresh simplex around the best
    point found so far, offset by ``initial_scale`` along every axis, and the
    best outcome over all runs is returned.  Non-finite values anywhere but
    the initial point are treated as ``+inf`` so the simplex backs away from
    them.

    Raises
    ------
    DomainError
        ``f`` is not finite at the initial point.
    """
    x0 = [float(v) for v in opts.initial_point]
    if len(x0) > 4:
        raise DomainError("minimize supports at most 4 dimensions")
    f0 = f(x0)
    if not math.isfinite(f0):
        raise DomainError(f"objective is not finite at the initial point: {f0!r}")

    def safe(x):
        y = f(x)
        return y if math.isfinite(y) else math.inf

    best_x, best_f = x0, f0
    total_iterations = 0
    total_evals = 1
    converged = False
    start = x0
    for _ in range(opts.restarts + 1):
        x, fx, its, ok, evals = _nelder_mead(
            safe, start, opts.initial_scale, opts.f_tol, opts.x_tol, opts.max_iterations
        )
        total_iterations += its
        total_evals += evals
        converged = ok
        if fx <= best_f:
            best_x, best_f = x, fx
        start = best_x
    return MinimizeResult(tuple(best_x), best_f, total_iterations, converged, total_evals)
