"""Selects the compiled or pure-Python backend for the Feynman integrals.

The Cython extension ``polaron._kernels`` is used when it imports; set
``POLARON_PURE_PYTHON=1`` to force the fallback.  Both backends run the same
exp-sinh scheme and raise the same exceptions.
"""
import math
import os

from . import _fallback
from .errors import ConvergenceError, IntegrandError
from .quadrature import QuadratureResult

__all__ = ["BACKEND", "ENERGY", "MASS", "feynman_integral", "python_feynman_integral"]

ENERGY = 0
MASS = 1

_compiled = None
if os.environ.get("POLARON_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def compiled_feynman_integral(kind, v, w, tol):
    if _compiled is None:
        raise ImportError("polaron._kernels is not available")
    value, err, count, status, bad_x, bad_value = _compiled.feynman_integral(
        kind, v, w, tol.abs_tol, tol.rel_tol, tol.max_evaluations
    )
    if status == 0:
        return QuadratureResult(value, err, count)
    if status == 2:
        raise IntegrandError(bad_x, bad_value)
    best = QuadratureResult(value, err if status == 1 else math.inf, count)
    if status == 3:
        raise ConvergenceError(f"evaluation budget of {tol.max_evaluations} exhausted", best=best)
    raise ConvergenceError(f"no convergence (error estimate {err:.3g})", best=best)


python_feynman_integral = _fallback.feynman_integral

feynman_integral = compiled_feynman_integral if _compiled is not None else python_feynman_integral
