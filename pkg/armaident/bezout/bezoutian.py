# armaident/bezout/bezoutian.py

"""
Bezout matrices of equal-degree polynomial pairs.

B(a, b) is the n x n matrix with
    a(z) b(w) - a(w) b(z) = (z - w) u_n(z)^T B(a, b) u_n(w).
It is singular exactly when a and b share a factor; its kernel is spanned
by vectors built from the common zeros of a^ and b^.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import block_diag

from ..config import DEFAULT_TOLERANCES
from ..errors import BadFactorization, DegreeMismatch, NotAFactor
from ..poly import Polynomial, common_roots, deflate, from_factor_parameters
from ..structmat import (
    basis_vector,
    m_matrix,
    n_matrix,
    shift_matrix,
    sylvester,
    t_phi_matrix,
    u_phi_matrix,
)

logger = logging.getLogger(__name__)

Number = Union[float, complex]


@dataclass(frozen=True)
class BezoutMatrix:
    n: int
    entries: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


@dataclass(frozen=True)
class KernelBasis:
    """
    Kernel vectors of B(a, b), one group per common zero.

    A complex zero gamma contributes the real and imaginary parts of its
    vectors; its conjugate is not listed separately.
    """

    vectors: Tuple[np.ndarray, ...]
    common_roots: Tuple[Tuple[complex, int], ...]
    residuals: Tuple[float, ...]

    def as_matrix(self, n: int) -> np.ndarray:
        """Vectors as columns of an n x k array."""
        if not self.vectors:
            return np.zeros((n, 0))
        return np.column_stack(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)


def _real_if_close(A: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    A = np.asarray(A)
    if np.iscomplexobj(A):
        scale = max(1.0, float(np.max(np.abs(A)))) if A.size else 1.0
        if A.size == 0 or np.max(np.abs(A.imag)) <= tol * scale:
            return A.real.copy()
    return A


def _bezout_from_coeffs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Coefficient recursion B[i, j] = d[i+1, j] + B[i+1, j-1],
    d[i, j] = a_i b_j - a_j b_i, out-of-range entries zero.
    """
    n = len(a) - 1
    dtype = complex if (np.iscomplexobj(a) or np.iscomplexobj(b)) else float
    B = np.zeros((n, n), dtype=dtype)
    for i in range(n - 1, -1, -1):
        for j in range(n):
            value = a[i + 1] * b[j] - a[j] * b[i + 1]
            if i + 1 < n and j >= 1:
                value += B[i + 1, j - 1]
            B[i, j] = value
    return B


def _require_equal(a: Polynomial, b: Polynomial) -> int:
    if a.degree != b.degree:
        raise DegreeMismatch(
            f"equal degrees required (p=q), got {a.degree} and {b.degree}"
        )
    if a.degree < 1:
        raise DegreeMismatch("Bezout matrix needs a common degree n >= 1")
    return a.degree


def _pad(coeffs: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=np.result_type(coeffs, float))
    out[: len(coeffs)] = coeffs
    return out


def bezout_matrix(a: Polynomial, b: Polynomial) -> BezoutMatrix:
    n = _require_equal(a, b)
    return BezoutMatrix(n=n, entries=_bezout_from_coeffs(a.coeffs, b.coeffs))


def bezout_decompose_once(
    a: Polynomial,
    b: Polynomial,
    alpha: Number,
    beta: Number,
    tol: Optional[float] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Peel the factors (1 - alpha z) from a and (1 - beta z) from b.

    Returns B(a_{-1}, b_{-1}) and
        U_alpha (B(a_{-1}, b_{-1}) + 0) U_beta^T + (beta - alpha) b_beta a_alpha^T,
    where a_alpha, b_beta are the deflated coefficients padded to length n.

    @raises NotAFactor if either deflation leaves a remainder above tol.
    """
    n = _require_equal(a, b)
    a_low, _ = deflate(a, alpha, tol)
    b_low, _ = deflate(b, beta, tol)

    inner = _bezout_from_coeffs(a_low, b_low)
    padded = np.zeros((n, n), dtype=np.result_type(inner, complex))
    padded[: n - 1, : n - 1] = inner

    a_alpha = _pad(a_low, n)
    b_beta = _pad(b_low, n)
    rebuilt = (
        u_phi_matrix(n, complex(alpha)) @ padded @ u_phi_matrix(n, complex(beta)).T
        + (beta - alpha) * np.outer(b_beta, a_alpha)
    )
    return _real_if_close(inner), _real_if_close(rebuilt)


def _check_factorization(p: Polynomial, params: Sequence[Number], tol: float, name: str) -> None:
    if len(params) != p.degree:
        raise BadFactorization(
            f"{name}: expected {p.degree} factor parameters, got {len(params)}"
        )
    try:
        expanded = from_factor_parameters(params)
    except ValueError as exc:
        raise BadFactorization(f"{name}: {exc}") from exc
    residual = float(np.max(np.abs(expanded.coeffs - p.coeffs)))
    if residual > tol:
        raise BadFactorization(
            f"{name}: factor parameters re-expand with residual {residual:.3e} > {tol:.1e}"
        )


def bezout_expansion(
    a: Polynomial,
    b: Polynomial,
    alphas: Sequence[Number],
    betas: Sequence[Number],
    tol: Optional[float] = None,
) -> np.ndarray:
    """
    B(a, b) as the sum over k of (beta_k - alpha_k) x_k y_k^T with
        x_k = U_{alpha_1}..U_{alpha_{k-1}} U_{beta_{k+1}}..U_{beta_n} e
        y_k = U_{beta_1}..U_{beta_{k-1}} U_{alpha_{k+1}}..U_{alpha_n} e
    for full factor-parameter lists a(z) = prod(1 - alpha_k z), b(z) = prod(1 - beta_k z).

    @raises BadFactorization when a list does not re-expand to its polynomial.
    """
    tol = DEFAULT_TOLERANCES.factorization_tol if tol is None else tol
    n = _require_equal(a, b)
    _check_factorization(a, alphas, tol, "alphas")
    _check_factorization(b, betas, tol, "betas")

    ua = [u_phi_matrix(n, complex(x)) for x in alphas]
    ub = [u_phi_matrix(n, complex(x)) for x in betas]
    e = basis_vector(n, 0).astype(complex)

    out = np.zeros((n, n), dtype=complex)
    for k in range(n):
        x = e
        for U in ua[:k] + ub[k + 1:]:
            x = U @ x
        y = e
        for U in ub[:k] + ua[k + 1:]:
            y = U @ y
        out += (complex(betas[k]) - complex(alphas[k])) * np.outer(x, y)
    return _real_if_close(out)


def bezout_common_zero_factor(
    a: Polynomial,
    b: Polynomial,
    phi: Number,
    times: int = 1,
    tol: Optional[float] = None,
) -> np.ndarray:
    """
    B(a_{-j}, b_{-j}) after peeling the common factor (1 - phi z) j = times
    times from both polynomials, so that
        B(a, b) = U_phi^j (B(a_{-j}, b_{-j}) + 0_j) (U_phi^T)^j.

    @raises NotAFactor if phi is not a zero of a^ or b^ (of that multiplicity).
    """
    n = _require_equal(a, b)
    if not 1 <= times <= n:
        raise NotAFactor(f"times must lie in 1..{n}, got {times}")

    a_low, b_low = a.coeffs, b.coeffs
    for _ in range(times):
        a_low, _ = deflate(a_low, phi, tol)
        b_low, _ = deflate(b_low, phi, tol)
    return _real_if_close(_bezout_from_coeffs(a_low, b_low))


def common_zero_reconstruction(
    inner: np.ndarray, phi: Number, n: int, times: int = 1
) -> np.ndarray:
    """U_phi^j (inner + 0_{j x j}) (U_phi^T)^j."""
    inner = np.asarray(inner)
    padded = np.zeros((n, n), dtype=np.result_type(inner, type(phi)))
    padded[: n - times, : n - times] = inner
    U = np.linalg.matrix_power(u_phi_matrix(n, phi), times)
    return _real_if_close(U @ padded @ U.T)


def _kernel_vectors(n: int, gamma: Number, multiplicity: int) -> List[np.ndarray]:
    """v^j = (T_gamma^j J^(j-1))^T l for j = 1..multiplicity."""
    T = t_phi_matrix(n, gamma)
    J = shift_matrix(n)
    ell = basis_vector(n, -1)
    out = []
    for j in range(1, multiplicity + 1):
        K = np.linalg.matrix_power(T, j) @ np.linalg.matrix_power(J, j - 1)
        out.append(K.T @ ell)
    return out


def kernel_basis(
    a: Polynomial,
    b: Polynomial,
    tol: Optional[float] = None,
) -> KernelBasis:
    """
    Kernel of B(a, b) from the common zeros of a^ and b^.

    Each vector is checked against |B v| <= tol |B| |v|; failures are
    logged and kept in the basis with their residual.
    """
    tol = DEFAULT_TOLERANCES.kernel_tol if tol is None else tol
    n = _require_equal(a, b)
    B = bezout_matrix(a, b).entries
    scale = float(np.linalg.norm(B, 2))

    shared = common_roots(a, b)
    vectors: List[np.ndarray] = []
    kept_roots: List[Tuple[complex, int]] = []
    for gamma, mult in shared:
        if gamma.imag < 0.0:
            # represented by its conjugate
            continue
        kept_roots.append((gamma, mult))
        if gamma.imag == 0.0:
            vectors.extend(_kernel_vectors(n, gamma.real, mult))
        else:
            for v in _kernel_vectors(n, gamma, mult):
                vectors.extend([v.real.copy(), v.imag.copy()])

    residuals = []
    for v in vectors:
        r = float(np.linalg.norm(B @ v))
        bound = tol * scale * float(np.linalg.norm(v))
        if r > bound:
            logger.warning(
                "kernel vector fails annihilation check: |Bv| = %.3e > %.3e", r, bound
            )
        residuals.append(r)

    logger.debug("kernel basis: %d vectors from %d common zeros", len(vectors), len(shared))
    return KernelBasis(
        vectors=tuple(vectors),
        common_roots=tuple(kept_roots),
        residuals=tuple(residuals),
    )


# ---------- Link with the resultant ----------


def bezout_block(c: Polynomial, a: Polynomial) -> np.ndarray:
    """I + B(c, a) as a 2n x 2n block diagonal matrix."""
    B = bezout_matrix(c, a).entries
    return block_diag(np.eye(B.shape[0]), B)


def sylvester_bezout_relation(c: Polynomial, a: Polynomial) -> Tuple[np.ndarray, np.ndarray]:
    """Both sides of M(c, a) R(c, -a) = (I + B(c, a)) N(c)."""
    left = m_matrix(c, a) @ sylvester(c, a)
    right = bezout_block(c, a) @ n_matrix(c)
    return left, right
