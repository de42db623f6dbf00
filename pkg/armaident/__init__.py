# armaident/__init__.py

"""
Fisher information and identifiability of ARMA(p, q) models through
Stein equations, Sylvester resultants and Bezout matrices.
"""

from .errors import ArmaIdentError, InputError, NumericalFailure
from .config import DEFAULT_TOLERANCES, SIMULATION_DEFAULTS, Tolerances
from .poly import Polynomial, make_polynomial
from .fisher import (
    ArmaModel,
    IdentReport,
    Verdict,
    fisher_information,
    fisher_factorization,
    identifiability_report,
)

__version__ = "0.1.0"
