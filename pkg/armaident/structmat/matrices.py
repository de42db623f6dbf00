# armaident/structmat/matrices.py

"""
Dense builders for the structured matrices used throughout the package.

Conventions (all matrices are plain numpy arrays):
  - J: forward shift, J[i, j] = 1 iff i == j + 1
  - P: exchange (anti-diagonal identity)
  - e / l: first / last standard basis vector
  - U_phi = I - phi J and its inverse T_phi
  - S(a), S(a^), S~(c^): Hankel matrices of coefficients
  - R(c, -a): Sylvester resultant matrix
  - M(c, a), N(c): block transformations of the equal-degree case
"""

import logging
import warnings
from typing import Optional, Tuple, Union

import numpy as np
from scipy.linalg import LinAlgWarning, hankel, lu_factor, toeplitz

from ..config import DEFAULT_TOLERANCES
from ..errors import BadDimension, DegreeMismatch
from ..poly import Polynomial, roots_of_reciprocal

logger = logging.getLogger(__name__)

Number = Union[float, complex]


def _require_size(n: int, what: str = "n") -> None:
    if n < 1:
        raise BadDimension(f"{what} must be >= 1, got {n}")


def _require_degree(p: Polynomial, name: str) -> int:
    if p.degree < 1:
        raise BadDimension(f"{name} must have degree >= 1, got degree {p.degree}")
    return p.degree


def _dtype_for(value: Number):
    return complex if isinstance(value, complex) or np.iscomplexobj(value) else float


# ---------- Elementary matrices ----------


def shift_matrix(n: int) -> np.ndarray:
    _require_size(n)
    return np.eye(n, k=-1)


def exchange_matrix(n: int) -> np.ndarray:
    _require_size(n)
    return np.fliplr(np.eye(n))


def basis_vector(n: int, k: int = 0) -> np.ndarray:
    """Standard basis vector of length n; k = 0 gives e, k = -1 gives l."""
    _require_size(n)
    v = np.zeros(n)
    v[k] = 1.0
    return v


def u_vector(n: int, z: Number, starred: bool = False) -> np.ndarray:
    """
    u_n(z) = (1, z, ..., z^(n-1)), or u*_n(z) = (z^(n-1), ..., 1) when starred.
    """
    _require_size(n)
    out = np.empty(n, dtype=complex)
    out[0] = 1.0
    for k in range(1, n):
        out[k] = out[k - 1] * z
    return out[::-1].copy() if starred else out


def u_phi_matrix(n: int, phi: Number) -> np.ndarray:
    """U_phi = I - phi J."""
    _require_size(n)
    dtype = _dtype_for(phi)
    return np.eye(n, dtype=dtype) - phi * shift_matrix(n).astype(dtype)


def t_phi_matrix(n: int, phi: Number) -> np.ndarray:
    """T_phi = U_phi^{-1}: lower triangular Toeplitz with entries phi^(i-j)."""
    _require_size(n)
    dtype = _dtype_for(phi)
    powers = np.empty(n, dtype=dtype)
    powers[0] = 1.0
    for k in range(1, n):
        powers[k] = powers[k - 1] * phi
    first_row = np.zeros(n, dtype=dtype)
    first_row[0] = 1.0
    return toeplitz(powers, first_row)


# ---------- Hankel coefficient matrices ----------


def s_matrix(p: Polynomial) -> np.ndarray:
    """S(a)[i, j] = a_{i+j+1} (0-based), zero past the degree."""
    n = _require_degree(p, "polynomial")
    tail = p.coeffs[1:]
    last_row = np.zeros(n)
    last_row[0] = tail[-1]
    return hankel(tail, last_row)


def s_hat_matrix(p: Polynomial) -> np.ndarray:
    """S(a^)[i, j] = a_{n-1-i-j} (0-based), zero for negative index."""
    n = _require_degree(p, "polynomial")
    first_col = p.coeffs[:n][::-1]
    last_row = np.zeros(n)
    last_row[0] = p.coeffs[0]
    return hankel(first_col, last_row)


def s_tilde_hat(c: Polynomial) -> np.ndarray:
    """(n+1) x (n+1) Hankel matrix with first row (c_n, ..., c_1, 1)."""
    n = _require_degree(c, "polynomial")
    last_row = np.zeros(n + 1)
    last_row[0] = c.coeffs[0]
    return hankel(c.coeffs[::-1], last_row)


def psp_matrix(c: Polynomial) -> np.ndarray:
    """
    Explicit form of P S(c^) P (J - e c^T).

    Entry (i, j), 1-based with i, j <= n-1, is c_{i+j-n} (zero for a
    negative index); entry (n, n) is -c_n; everything else is zero.
    """
    n = _require_degree(c, "polynomial")
    out = np.zeros((n, n))
    for i in range(1, n):
        for j in range(1, n):
            k = i + j - n
            if k >= 0:
                out[i - 1, j - 1] = c.coeffs[k]
    out[n - 1, n - 1] = -c.coeffs[n]
    return out


# ---------- Resultant ----------


def sylvester(c: Polynomial, a: Polynomial) -> np.ndarray:
    """
    R(c, -a): p rows of shifted (1, c_1, ..., c_q) over q rows of
    shifted -(1, a_1, ..., a_p), with p = deg a and q = deg c.
    """
    p, q = a.degree, c.degree
    m = p + q
    if m == 0:
        raise BadDimension("Sylvester matrix needs p + q >= 1")

    R = np.zeros((m, m))
    for i in range(p):
        R[i, i:i + q + 1] = c.coeffs
    for i in range(q):
        R[p + i, i:i + p + 1] = -a.coeffs
    return R


def _lu(A: np.ndarray):
    with warnings.catch_warnings():
        # exactly singular inputs are expected here
        warnings.simplefilter("ignore", LinAlgWarning)
        return lu_factor(A, check_finite=True)


def determinant(A: np.ndarray) -> float:
    """Determinant from an LU factorization with partial pivoting."""
    A = np.asarray(A, dtype=float)
    if A.size == 0:
        return 1.0
    lu, piv = _lu(A)
    swaps = int(np.count_nonzero(piv != np.arange(len(piv))))
    sign = -1.0 if swaps % 2 else 1.0
    return float(sign * np.prod(np.diag(lu)))


def resultant_det(a: Polynomial, c: Polynomial) -> float:
    """det R(c, -a)."""
    return determinant(sylvester(c, a))


def resultant_det_from_roots(a: Polynomial, c: Polynomial) -> float:
    """(-1)^q prod_i prod_j (gamma_j - alpha_i) over the zeros of a^ and c^."""
    alphas = roots_of_reciprocal(a).expanded()
    gammas = roots_of_reciprocal(c).expanded()
    value = 1.0 + 0j
    if alphas.size and gammas.size:
        value = complex(np.prod(gammas[None, :] - alphas[:, None]))
    sign = -1.0 if c.degree % 2 else 1.0
    return float(sign * value.real)


def lu_singular(A: np.ndarray, tol: Optional[float] = None) -> bool:
    """
    True when the smallest LU pivot is negligible against the largest.
    """
    tol = DEFAULT_TOLERANCES.det_tol if tol is None else tol
    lu, _ = _lu(np.asarray(A, dtype=float))
    pivots = np.abs(np.diag(lu))
    largest = float(np.max(pivots)) if pivots.size else 0.0
    if largest == 0.0:
        return True
    return bool(np.min(pivots) <= tol * largest)


def numerical_rank(A: np.ndarray, tol: Optional[float] = None) -> Tuple[int, np.ndarray]:
    """
    Rank by singular values: count of sigma_k > tol * sigma_max.

    Returns (rank, singular values in descending order).
    """
    tol = DEFAULT_TOLERANCES.rank_tol if tol is None else tol
    A = np.asarray(A)
    if A.size == 0:
        return 0, np.empty(0)
    s = np.linalg.svd(A, compute_uv=False)
    if s[0] == 0.0:
        return 0, s
    return int(np.count_nonzero(s > tol * s[0])), s


# ---------- Equal-degree transformations ----------


def _require_equal_degrees(c: Polynomial, a: Polynomial) -> int:
    if a.degree != c.degree:
        raise DegreeMismatch(
            f"equal degrees required (p=q), got p={a.degree}, q={c.degree}"
        )
    return _require_degree(a, "AR polynomial")


def m_matrix(c: Polynomial, a: Polynomial) -> np.ndarray:
    """M(c, a) = [[P, 0], [P S(a^) P, P S(c^) P]]."""
    n = _require_equal_degrees(c, a)
    P = exchange_matrix(n)
    return np.block([
        [P, np.zeros((n, n))],
        [P @ s_hat_matrix(a) @ P, P @ s_hat_matrix(c) @ P],
    ])


def n_matrix(c: Polynomial) -> np.ndarray:
    """N(c) = [[P S(c^) P, S(c)], [0, I]]."""
    n = _require_degree(c, "MA polynomial")
    P = exchange_matrix(n)
    return np.block([
        [P @ s_hat_matrix(c) @ P, s_matrix(c)],
        [np.zeros((n, n)), np.eye(n)],
    ])
