# armaident/poly/polynomial.py

"""
Polynomials with unit constant term.

A Polynomial stores a(z) = 1 + a_1 z + ... + a_p z^p as the ascending
coefficient array (1, a_1, ..., a_p). The reciprocal polynomial is
a^(z) = z^p a(1/z) = z^p + a_1 z^(p-1) + ... + a_p, i.e. the same
coefficients reversed; its zeros are the factor parameters alpha in
a(z) = prod(1 - alpha z).
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np
import numpy.polynomial.polynomial as npoly

from ..config import DEFAULT_TOLERANCES
from ..errors import ConstantTermNotOne, EmptyCoefficients, InputError, NotAFactor

Number = Union[float, complex]


@dataclass(frozen=True, eq=False)
class Polynomial:
    """
    Real polynomial in ascending powers with coeffs[0] == 1.

    @param coeffs Read-only float array (1, a_1, ..., a_p).
    """

    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def tail(self) -> np.ndarray:
        """The parameter vector (a_1, ..., a_p)."""
        return self.coeffs[1:]

    def __call__(self, z):
        return npoly.polyval(z, self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs.tobytes())

    def __repr__(self) -> str:
        return f"Polynomial({self.coeffs.tolist()})"


def make_polynomial(coeffs: Sequence[float]) -> Polynomial:
    """
    Validate and freeze an ascending coefficient sequence.

    @raises EmptyCoefficients if the sequence is empty.
    @raises ConstantTermNotOne unless coeffs[0] == 1 exactly.
    """
    arr = np.array(coeffs, dtype=float).ravel()
    if arr.size == 0:
        raise EmptyCoefficients("coefficient sequence is empty")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"coefficients must be finite, got {arr.tolist()}")
    if arr[0] != 1.0:
        raise ConstantTermNotOne(
            f"constant term must be exactly 1 (a_0 = 1 convention), got {arr[0]!r}"
        )
    arr.setflags(write=False)
    return Polynomial(arr)


def from_tail(tail: Sequence[float]) -> Polynomial:
    """Build 1 + t_1 z + ... from the parameter vector (t_1, ..., t_k)."""
    return make_polynomial([1.0, *list(tail)])


def from_factor_parameters(params: Sequence[Number]) -> Polynomial:
    """
    Coefficients of prod_k (1 - alpha_k z).

    Complex parameters must come in conjugate pairs; the (round-off)
    imaginary part of the product is dropped.
    """
    coeffs = np.array([1.0 + 0j])
    for alpha in params:
        coeffs = npoly.polymul(coeffs, [1.0, -complex(alpha)])
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    if np.max(np.abs(coeffs.imag)) > 1e-10 * scale:
        raise InputError(
            "factor parameters are not closed under conjugation; product is not real"
        )
    real = coeffs.real.copy()
    real[0] = 1.0
    return make_polynomial(real)


def reciprocal(p: Polynomial) -> np.ndarray:
    """Ascending coefficients of p^(z) = z^deg p(1/z): the coefficients reversed."""
    return p.coeffs[::-1].copy()


def reciprocal_value(p: Polynomial, z: Number) -> Number:
    """Evaluate p^ at z."""
    return npoly.polyval(z, p.coeffs[::-1])


def product(a: Polynomial, c: Polynomial) -> Polynomial:
    """g(z) = a(z) c(z); degree p + q, constant term 1."""
    return make_polynomial(npoly.polymul(a.coeffs, c.coeffs))


def horner_sequence(p: Polynomial, lam: Number) -> np.ndarray:
    """
    Partial Horner values (p^_0(lam), ..., p^_{deg-1}(lam)) with
    p^_0 = 1 and p^_k = lam * p^_{k-1} + p_k.

    One more step would give p^(lam) itself. Degree 0 gives an empty array.
    """
    out = np.empty(p.degree, dtype=complex)
    acc = 1.0 + 0j
    for k in range(p.degree):
        if k:
            acc = lam * acc + p.coeffs[k]
        out[k] = acc
    return out


def deflate(
    coeffs: Union[Polynomial, np.ndarray],
    phi: Number,
    tol: Optional[float] = None,
) -> Tuple[np.ndarray, float]:
    """
    Divide p(z) by (1 - phi z) by synthetic division.

    Returns the ascending coefficients of p_{-1} (degree one less, constant
    term 1, complex when phi is) and the division remainder measured
    relative to the coefficient 1-norm.

    @raises NotAFactor when the relative remainder exceeds tol.
    """
    tol = DEFAULT_TOLERANCES.deflation_tol if tol is None else tol
    c = coeffs.coeffs if isinstance(coeffs, Polynomial) else np.asarray(coeffs)
    n = len(c) - 1
    if n < 1:
        raise NotAFactor("cannot deflate a constant polynomial")

    dtype = complex if (np.iscomplexobj(c) or np.iscomplexobj(phi)) else float
    q = np.empty(n, dtype=dtype)
    q[0] = c[0]
    for k in range(1, n):
        q[k] = c[k] + phi * q[k - 1]
    remainder = c[n] + phi * q[n - 1]

    residual = float(abs(remainder) / max(1.0, np.sum(np.abs(c))))
    if residual > tol:
        raise NotAFactor(
            f"(1 - {phi} z) is not a factor: relative remainder {residual:.3e} > {tol:.1e}"
        )
    return q, residual
