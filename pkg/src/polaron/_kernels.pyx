# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Feynman-model integrals.

Same exp-sinh scheme as ``polaron.quadrature.integrate_semi_infinite``
(level-0 walk, step halving, same stopping rule), with the two Feynman
integrands inlined.  Operation order matches the pure-Python path so both
give the same numbers.
"""
from libc.math cimport exp, expm1, sqrt, sinh, cosh, fabs, isfinite, M_PI

cdef double HALF_PI = 0.5 * M_PI
cdef double TAIL_EPS = 1e-18
cdef int MIN_LEVEL = 3
cdef int MAX_LEVEL = 12
cdef double MAX_T = 5.0
cdef double MAX_EXPONENT = 709.0

cdef enum Status:
    OK = 0
    NOT_CONVERGED = 1
    NON_FINITE = 2
    BUDGET = 3

ctypedef struct Outcome:
    double value
    double abs_err
    long evaluations
    int status
    double bad_x
    double bad_value


cdef inline double _integrand(int kind, double x, double v, double ww, double c) noexcept nogil:
    cdef double d = ww * x + c * (-expm1(-v * x))
    if kind == 0:
        return exp(-x) / sqrt(d)
    return x * x * exp(-x) / (d * sqrt(d))


cdef inline bint _node(double t, double* x, double* wt) noexcept nogil:
    cdef double u = HALF_PI * sinh(t)
    cdef double d
    if u > MAX_EXPONENT:
        return False
    d = exp(u)
    if d == 0.0:
        return False
    x[0] = d
    wt[0] = HALF_PI * cosh(t) * d
    return True


cdef Outcome _integrate(int kind, double v, double w, double abs_tol, double rel_tol,
                        long max_evaluations) noexcept nogil:
    cdef Outcome out
    cdef double ww = w * w
    cdef double c = (v * v - w * w) / v
    cdef double x = 0.0, wt = 0.0, y, term, total, previous, new, target
    cdef double h = 1.0
    cdef long count = 0
    cdef int lo = 0, hi = 0, j, quiet, direction, level, k
    cdef long n_new, i

    out.value = 0.0
    out.abs_err = 0.0
    out.status = OK
    out.bad_x = 0.0
    out.bad_value = 0.0

    _node(0.0, &x, &wt)
    y = _integrand(kind, x, v, ww, c)
    count += 1
    if not isfinite(y):
        out.status = NON_FINITE
        out.bad_x = x
        out.bad_value = y
        out.evaluations = count
        return out
    total = 0.0
    total += wt * y
    for k in range(2):
        direction = -1 if k == 0 else 1
        j = 0
        quiet = 0
        while quiet < 2 and fabs(<double>j) < MAX_T:
            j += direction
            if not _node(<double>j, &x, &wt):
                break
            y = _integrand(kind, x, v, ww, c)
            count += 1
            if not isfinite(y):
                out.status = NON_FINITE
                out.bad_x = x
                out.bad_value = y
                out.evaluations = count
                return out
            term = wt * y
            total += term
            if fabs(term) <= TAIL_EPS * fabs(total):
                quiet += 1
            else:
                quiet = 0
        if direction < 0:
            lo = j
        else:
            hi = j

    out.value = total
    for level in range(1, MAX_LEVEL + 1):
        h *= 0.5
        n_new = (hi - lo) * (1 << (level - 1))
        if count + n_new > max_evaluations:
            out.status = BUDGET
            out.abs_err = 1.0 / 0.0
            out.evaluations = count
            return out
        new = 0.0
        for i in range(n_new):
            if not _node(lo + (2 * i + 1) * h, &x, &wt):
                continue
            y = _integrand(kind, x, v, ww, c)
            count += 1
            if not isfinite(y):
                out.status = NON_FINITE
                out.bad_x = x
                out.bad_value = y
                out.evaluations = count
                return out
            new += wt * y
        total += new
        previous = out.value
        out.value = h * total
        out.abs_err = fabs(out.value - previous)
        target = rel_tol * fabs(out.value)
        if abs_tol > target:
            target = abs_tol
        if level >= MIN_LEVEL and out.abs_err <= target:
            out.evaluations = count
            return out
    out.status = NOT_CONVERGED
    out.evaluations = count
    return out


def feynman_integral(int kind, double v, double w, double abs_tol, double rel_tol,
                     long max_evaluations):
    """Integral for the Feynman energy (kind 0) or mass (kind 1).

    Returns ``(value, abs_err, evaluations, status, bad_x, bad_value)`` with
    status 0 ok, 1 not converged, 2 non-finite integrand, 3 budget exhausted.
    """
    cdef Outcome out
    with nogil:
        out = _integrate(kind, v, w, abs_tol, rel_tol, max_evaluations)
    return (out.value, out.abs_err, out.evaluations, out.status, out.bad_x, out.bad_value)
