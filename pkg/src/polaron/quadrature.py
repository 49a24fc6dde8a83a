"""Double-exponential quadrature on finite and semi-infinite intervals.

Both rules use the trapezoidal rule in a transformed variable ``t``:

* finite ``[a, b]``: tanh-sinh, ``x = a + (b - a) / (1 + exp(-pi sinh t))``
* semi-infinite ``[a, inf)``: exp-sinh, ``x = a + exp(pi/2 sinh t)``

The transformed integrands decay double-exponentially in ``t`` for
integrands with algebraic endpoint singularities, which is how the
``x**-1/2`` singularities of the polaron integrands are absorbed without
any special casing.  A singular endpoint is never evaluated.  Nodes closer
to an endpoint than its rounding resolution are skipped, so an integrand
that rebuilds the distance as ``x - a`` with ``a != 0`` cannot be resolved
much below ``sqrt(eps * |a|)`` there.

The ``t`` range is fixed once at the coarsest level (step 1) by walking
outwards until two consecutive terms are negligible; each following level
halves the step and only evaluates the new midpoints.  The difference
between consecutive levels is the reported error estimate.  Since the
error of these rules roughly squares at each level, the estimate is very
conservative.
"""
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, IntegrandError

__all__ = [
    "QuadratureResult",
    "Tolerance",
    "DEFAULT_TOLERANCE",
    "integrate_finite",
    "integrate_semi_infinite",
]

HALF_PI = 0.5 * math.pi

# Relative size below which a boundary term counts as negligible.
_TAIL_EPS = 1e-18
_MIN_LEVEL = 3
_MAX_LEVEL = 12
_MAX_T = 5.0
# exp() overflows just above 709.78
_MAX_EXPONENT = 709.0


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_err: float
    evaluations: int


@dataclass(frozen=True)
class Tolerance:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_evaluations: int = 1_000_000

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise DomainError("tolerances must be nonnegative")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise DomainError("at least one of abs_tol, rel_tol must be positive")
        if self.max_evaluations < 1:
            raise DomainError("max_evaluations must be positive")

    def target(self, value):
        return max(self.abs_tol, self.rel_tol * abs(value))


DEFAULT_TOLERANCE = Tolerance()


def _exp_sinh_node(a, t):
    """Node and weight of the exp-sinh map, or None past the usable range."""
    u = HALF_PI * math.sinh(t)
    if u > _MAX_EXPONENT:
        return None
    d = math.exp(u)
    x = a + d
    if x == a:
        return None
    return x, HALF_PI * math.cosh(t) * d


def _tanh_sinh_node(a, b, t):
    u = math.pi * math.sinh(t)
    if abs(u) > _MAX_EXPONENT:
        return None
    e = math.exp(-abs(u))
    s = 1.0 / (1.0 + e)
    # distance to the nearer endpoint is (b - a) * e * s
    d = (b - a) * e * s
    if u < 0:
        x = a + d
        if x == a:
            return None
    else:
        x = b - d
        if x == b:
            return None
    return x, (b - a) * math.pi * math.cosh(t) * e * s * s


def _evaluate(f, x):
    y = f(x)
    if not math.isfinite(y):
        raise IntegrandError(x, y)
    return y


def _integrate(f, node, tol):
    count = 0

    # Level 0: step 1, walk out from t = 0 in both directions.
    total = 0.0
    x, w = node(0.0)
    total += w * _evaluate(f, x)
    count += 1
    lo = hi = 0
    for direction in (-1, 1):
        j = 0
        quiet = 0
        while quiet < 2 and abs(j) < _MAX_T:
            nxt = node(float(j + direction))
            j += direction
            if nxt is None:
                # the node collapsed onto an endpoint; keep the bound here so
                # finer levels still reach the valid nodes just inside it
                break
            x, w = nxt
            term = w * _evaluate(f, x)
            count += 1
            total += term
            quiet = quiet + 1 if abs(term) <= _TAIL_EPS * abs(total) else 0
        if direction < 0:
            lo = j
        else:
            hi = j

    estimate = total
    h = 1.0
    for level in range(1, _MAX_LEVEL + 1):
        h *= 0.5
        n_new = (hi - lo) * (1 << (level - 1))
        if count + n_new > tol.max_evaluations:
            raise ConvergenceError(
                f"evaluation budget of {tol.max_evaluations} exhausted",
                best=QuadratureResult(estimate, math.inf, count),
            )
        new = 0.0
        for i in range(n_new):
            nxt = node(lo + (2 * i + 1) * h)
            if nxt is None:
                continue
            x, w = nxt
            new += w * _evaluate(f, x)
            count += 1
        total += new
        previous = estimate
        estimate = h * total
        err = abs(estimate - previous)
        if level >= _MIN_LEVEL and err <= tol.target(estimate):
            return QuadratureResult(estimate, err, count)
    raise ConvergenceError(
        f"no convergence after {_MAX_LEVEL} levels (error estimate {err:.3g})",
        best=QuadratureResult(estimate, err, count),
    )


def integrate_finite(f, a, b, tol=DEFAULT_TOLERANCE):
    """Integrate ``f`` over ``(a, b)``.

    The endpoints are never evaluated, so integrable singularities there are
    fine.  ``b = inf`` is accepted and forwarded to
    :func:`integrate_semi_infinite`.

    Raises
    ------
    ConvergenceError
        The tolerance was not met within the evaluation budget.  The best
        estimate is attached as ``best``.
    IntegrandError
        ``f`` returned NaN or an infinity.
    """
    a = float(a)
    b = float(b)
    if math.isnan(a) or math.isnan(b) or not a < b:
        raise DomainError(f"need a < b, got a={a!r}, b={b!r}")
    if math.isinf(a):
        raise DomainError("left endpoint must be finite")
    if math.isinf(b):
        return integrate_semi_infinite(f, a, tol)
    return _integrate(f, lambda t: _tanh_sinh_node(a, b, t), tol)


def integrate_semi_infinite(f, a, tol=DEFAULT_TOLERANCE):
    """Integrate ``f`` over ``(a, inf)``.

    ``f`` should decay at least exponentially; a singularity at ``a`` is
    allowed as long as it is integrable.
    """
    a = float(a)
    if not math.isfinite(a):
        raise DomainError(f"left endpoint must be finite, got {a!r}")
    return _integrate(f, lambda t: _exp_sinh_node(a, t), tol)
