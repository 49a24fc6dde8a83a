"""All-coupling Froehlich polaron from the operator method.

Closed-form ground-state energy and effective mass (:mod:`polaron.om`),
quadrature cross-checks of every closed form (:mod:`polaron.oracles`), and
the Feynman two-parameter variational baseline (:mod:`polaron.feynman`).
"""
from .errors import ConvergenceError, DomainError, IntegrandError
from .kernels import BACKEND
from .om import effective_mass, ground_state_energy, omega_of_alpha

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConvergenceError",
    "DomainError",
    "IntegrandError",
    "effective_mass",
    "ground_state_energy",
    "omega_of_alpha",
]
