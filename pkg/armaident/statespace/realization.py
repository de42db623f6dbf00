# armaident/statespace/realization.py

"""
State-space realizations of the score process.

Two realizations of the same transfer function tau(z):
  - (F, b_in): block-diagonal companions of a and c, driven by (e_p; -e_q)
  - (G, e) observed through C = R(c, -a), with G the companion of g = a c
They are linked by R(c, -a) G = F R(c, -a).
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..config import DEFAULT_TOLERANCES
from ..errors import BadDimension, DegreeMismatch, DimensionMismatch, NotCommonZero, PoleEvaluation
from ..poly import Polynomial, horner_sequence, product, reciprocal_value, roots_of_reciprocal
from ..structmat import basis_vector, exchange_matrix, shift_matrix, sylvester, u_vector

logger = logging.getLogger(__name__)

Number = Union[float, complex]


@dataclass(frozen=True)
class ScoreSystem:
    """
    @param F   (p+q) x (p+q) block-diagonal companion matrix
    @param G   (p+q) x (p+q) companion matrix of g = a c
    @param b_in Input vector (e_p; -e_q)
    @param C   Sylvester matrix R(c, -a)
    """

    F: np.ndarray
    G: np.ndarray
    b_in: np.ndarray
    C: np.ndarray
    p: int
    q: int

    @property
    def dim(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class TransformedPair:
    G_M: np.ndarray
    F_N: np.ndarray


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    spectral_radius: float


# ---------- Builders ----------


def companion(p: Polynomial) -> np.ndarray:
    """J - e (p_1, ..., p_deg)^T; 0 x 0 for a constant polynomial."""
    n = p.degree
    if n == 0:
        return np.zeros((0, 0))
    out = shift_matrix(n)
    out[0, :] -= p.tail
    return out


def build_score_system(a: Polynomial, c: Polynomial) -> ScoreSystem:
    p, q = a.degree, c.degree
    m = p + q
    if m == 0:
        raise BadDimension("score system needs p + q >= 1")

    F = np.zeros((m, m))
    F[:p, :p] = companion(a)
    F[p:, p:] = companion(c)

    b_in = np.zeros(m)
    if p:
        b_in[0] = 1.0
    if q:
        b_in[p] = -1.0

    G = companion(product(a, c))
    return ScoreSystem(F=F, G=G, b_in=b_in, C=sylvester(c, a), p=p, q=q)


# ---------- Transfer functions ----------


def transfer_tau(
    a: Polynomial, c: Polynomial, z: Number, pole_tol: Optional[float] = None
) -> np.ndarray:
    """tau(z) = (u*_p(z) / a^(z) ; -u*_q(z) / c^(z))."""
    pole_tol = DEFAULT_TOLERANCES.pole_tol if pole_tol is None else pole_tol
    parts = []
    for poly, sign, name in ((a, 1.0, "a^"), (c, -1.0, "c^")):
        if poly.degree == 0:
            continue
        value = reciprocal_value(poly, z)
        if abs(value) < pole_tol:
            raise PoleEvaluation(f"{name}({z}) = {value}: z is a pole of tau")
        parts.append(sign * u_vector(poly.degree, z, starred=True) / value)
    if not parts:
        raise BadDimension("transfer function needs p + q >= 1")
    return np.concatenate(parts)


def transfer_from_realization(
    A: np.ndarray, b: np.ndarray, C: Optional[np.ndarray], z: Number
) -> np.ndarray:
    """C (zI - A)^{-1} b by a dense complex solve; C = None means identity."""
    A = np.asarray(A)
    m = A.shape[0]
    x = np.linalg.solve(z * np.eye(m, dtype=complex) - A, np.asarray(b, dtype=complex))
    return x if C is None else np.asarray(C) @ x


# ---------- Controllability / observability ----------


def controllability_matrix(A: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[b, A b, ..., A^(m-1) b]."""
    A = np.asarray(A)
    b = np.asarray(b)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"A must be square, got shape {A.shape}")
    if b.ndim != 1 or b.shape[0] != A.shape[0]:
        raise DimensionMismatch(f"b must have length {A.shape[0]}, got shape {b.shape}")

    cols = [b]
    for _ in range(1, A.shape[0]):
        cols.append(A @ cols[-1])
    return np.column_stack(cols)


def observability_matrix(C: np.ndarray, A: np.ndarray) -> np.ndarray:
    """Rows C, C A, ..., C A^(m-1) stacked."""
    A = np.asarray(A)
    C = np.atleast_2d(np.asarray(C))
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"A must be square, got shape {A.shape}")
    if C.shape[1] != A.shape[0]:
        raise DimensionMismatch(f"C must have {A.shape[0]} columns, got {C.shape[1]}")

    blocks = [C]
    for _ in range(1, A.shape[0]):
        blocks.append(blocks[-1] @ A)
    return np.vstack(blocks)


def _is_zero_of(poly: Polynomial, lam: Number, tol: float) -> bool:
    if poly.degree == 0:
        return False
    scale = float(np.polyval(np.abs(poly.coeffs), abs(lam)))
    return abs(reciprocal_value(poly, lam)) <= tol * max(1.0, scale)


def uncontrollable_direction(
    a: Polynomial, c: Polynomial, lam: Number, tol: Optional[float] = None
) -> np.ndarray:
    """
    Left eigenvector (u, v) of F for the common zero lam with (u, v) b_in = 0.

    u and v are the Horner sequences of a and c at lam.

    @raises NotCommonZero unless lam is a zero of both a^ and c^.
    """
    tol = DEFAULT_TOLERANCES.deflation_tol if tol is None else tol
    if not (_is_zero_of(a, lam, tol) and _is_zero_of(c, lam, tol)):
        raise NotCommonZero(f"{lam} is not a common zero of a^ and c^")

    row = np.concatenate([horner_sequence(a, lam), horner_sequence(c, lam)])
    if np.isrealobj(lam) or complex(lam).imag == 0.0:
        return row.real.copy()
    return row


# ---------- Equal-degree transformations ----------


def transformed_pair(a: Polynomial, c: Polynomial) -> TransformedPair:
    """
    G_M = [[P (J - e a^T) P, 0], [(c - a) e^T, P J P - c e^T]]
    F_N = [[P (J - e a^T) P, 0], [e e^T, J - e c^T]]

    They are the conjugates M(c, a) F M(c, a)^{-1} and N(c) G N(c)^{-1}.
    """
    if a.degree != c.degree:
        raise DegreeMismatch(
            f"equal degrees required (p=q), got p={a.degree}, q={c.degree}"
        )
    n = a.degree
    if n < 1:
        raise DegreeMismatch("transformed pair needs a common degree n >= 1")

    P = exchange_matrix(n)
    J = shift_matrix(n)
    e = basis_vector(n, 0)
    av, cv = a.tail, c.tail

    top_left = P @ companion(a) @ P
    zero = np.zeros((n, n))
    G_M = np.block([
        [top_left, zero],
        [np.outer(cv - av, e), P @ J @ P - np.outer(cv, e)],
    ])
    F_N = np.block([
        [top_left, zero],
        [np.outer(e, e), J - np.outer(e, cv)],
    ])
    return TransformedPair(G_M=G_M, F_N=F_N)


# ---------- Spectra ----------


def stability_check(p: Polynomial, margin: Optional[float] = None) -> StabilityReport:
    """Stable iff every zero of p^ lies within 1 - margin of the origin."""
    margin = DEFAULT_TOLERANCES.stability_margin if margin is None else margin
    radius = roots_of_reciprocal(p).spectral_radius
    return StabilityReport(stable=radius < 1.0 - margin, spectral_radius=radius)


def characteristic_coefficients(A: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial of A, descending powers."""
    A = np.asarray(A)
    if A.size == 0:
        return np.ones(1)
    return np.real(np.poly(A))
