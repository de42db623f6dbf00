# armaident/errors.py

"""
Exceptions raised across the package.

Two families:
  - InputError: a precondition on the caller's data was violated
    (bad coefficients, mismatched degrees, malformed configuration).
  - NumericalFailure: the inputs were acceptable but the computation
    could not be completed (unstable dynamics, no convergence, singular system).

InputError is also a ValueError and NumericalFailure a RuntimeError, so code
that only catches the builtins keeps working.
"""

from typing import Optional


class ArmaIdentError(Exception):
    """Base class for every error raised by armaident."""


# ---------- Precondition errors ----------


class InputError(ArmaIdentError, ValueError):
    """Raised when an argument violates a documented precondition."""


class EmptyCoefficients(InputError):
    pass


class ConstantTermNotOne(InputError):
    pass


class BadDimension(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NotAFactor(InputError):
    """(1 - phi z) does not divide the polynomial within tolerance."""


class BadFactorization(InputError):
    """Supplied factor parameters do not re-expand to the polynomial."""


class NotCommonZero(InputError):
    pass


class PoleEvaluation(InputError):
    """Transfer function evaluated at (or too close to) a pole."""


class BadConfig(InputError):
    pass


# ---------- Numerical failures ----------


class NumericalFailure(ArmaIdentError, RuntimeError):
    """Raised when a computation cannot be carried out on valid inputs."""


class NotStable(NumericalFailure):
    """Spectral radius (or root modulus) is not strictly inside the unit circle."""


class NoConvergence(NumericalFailure):
    def __init__(self, msg: str, residual: Optional[float] = None):
        super().__init__(msg)
        self.residual = residual


class SingularSystem(NumericalFailure):
    pass
