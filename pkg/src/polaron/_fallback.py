"""Pure-Python Feynman-model integrals, used when the extension is missing."""
import math

from .quadrature import integrate_semi_infinite


def energy_integrand(v, w):
    ww = w * w
    c = (v * v - w * w) / v

    def f(x):
        d = ww * x + c * (-math.expm1(-v * x))
        return math.exp(-x) / math.sqrt(d)

    return f


def mass_integrand(v, w):
    ww = w * w
    c = (v * v - w * w) / v

    def f(x):
        d = ww * x + c * (-math.expm1(-v * x))
        return x * x * math.exp(-x) / (d * math.sqrt(d))

    return f


def feynman_integral(kind, v, w, tol):
    integrand = energy_integrand(v, w) if kind == 0 else mass_integrand(v, w)
    return integrate_semi_infinite(integrand, 0.0, tol)
