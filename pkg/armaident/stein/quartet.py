# armaident/stein/quartet.py

"""
The four Stein solutions attached to a model theta = (a, c):

    I = F I F^T + b_in b_in^T          (Fisher information)
    P = G P G^T + e e^T
    H = G_M H G_M^T + e_P e_P^T         (p = q only)
    Q = F_N Q F_N^T + e_P e_P^T         (p = q only)

with e_P = (l_n; 0_n). They are related by
    I = M^{-1} H M^{-T},  P = N^{-1} Q N^{-T},  H = T Q T,  T = I + B(c, a).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from ..bezout import bezout_block
from ..config import DEFAULT_TOLERANCES
from ..poly import Polynomial
from ..statespace import build_score_system, transformed_pair
from ..structmat import basis_vector, m_matrix, n_matrix
from .solver import SteinSolution, solve_stein

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SteinQuartet:
    """
    @param gaps Relative gaps of H_from_Q, I_from_H and P_from_Q (empty unless p = q)
    """

    I: np.ndarray
    P: np.ndarray
    H: Optional[np.ndarray] = None
    Q: Optional[np.ndarray] = None
    gaps: Dict[str, float] = field(default_factory=dict)


def driving_vector(n: int) -> np.ndarray:
    """e_P = (l_n; 0_n)."""
    return np.concatenate([basis_vector(n, -1), np.zeros(n)])


def stein_quartet(
    a: Polynomial,
    c: Polynomial,
    tol: Optional[float] = None,
    oracle: bool = False,
) -> SteinQuartet:
    """
    Solve the four equations; H and Q are None unless deg a == deg c >= 1.
    """
    system = build_score_system(a, c)
    fisher = solve_stein(system.F, np.outer(system.b_in, system.b_in), tol, oracle)
    e = basis_vector(system.dim, 0)
    gram = solve_stein(system.G, np.outer(e, e), tol, oracle)

    if a.degree != c.degree:
        logger.debug("p=%d, q=%d: H and Q not defined", a.degree, c.degree)
        return SteinQuartet(I=fisher.X, P=gram.X)

    pair = transformed_pair(a, c)
    e_P = driving_vector(a.degree)
    drive = np.outer(e_P, e_P)
    H: SteinSolution = solve_stein(pair.G_M, drive, tol, oracle)
    Q: SteinSolution = solve_stein(pair.F_N, drive, tol, oracle)

    gaps = identity_gaps(a, c, fisher.X, gram.X, H.X, Q.X)
    limit = DEFAULT_TOLERANCES.quartet_identity_tol
    for name, gap in gaps.items():
        if gap > limit:
            logger.warning("quartet identity %s off by %.3e (limit %.1e)", name, gap, limit)
    return SteinQuartet(I=fisher.X, P=gram.X, H=H.X, Q=Q.X, gaps=gaps)


def _relative_gap(X: np.ndarray, Y: np.ndarray) -> float:
    return float(np.linalg.norm(X - Y) / max(np.linalg.norm(X), 1e-300))


def identity_gaps(
    a: Polynomial, c: Polynomial, I: np.ndarray, P: np.ndarray, H: np.ndarray, Q: np.ndarray
) -> Dict[str, float]:
    """|H - T Q T|, |I - M^{-1} H M^{-T}| and |P - N^{-1} Q N^{-T}|, each relative to the left side."""
    T = bezout_block(c, a)
    return {
        "H_from_Q": _relative_gap(H, T @ Q @ T),
        "I_from_H": _relative_gap(I, information_from_h(c, a, H)),
        "P_from_Q": _relative_gap(P, gramian_from_q(c, Q)),
    }


def information_from_h(c: Polynomial, a: Polynomial, H: np.ndarray) -> np.ndarray:
    """M(c, a)^{-1} H M(c, a)^{-T}."""
    M = m_matrix(c, a)
    left = np.linalg.solve(M, H)
    return np.linalg.solve(M, left.T).T


def gramian_from_q(c: Polynomial, Q: np.ndarray) -> np.ndarray:
    """N(c)^{-1} Q N(c)^{-T}."""
    N = n_matrix(c)
    left = np.linalg.solve(N, Q)
    return np.linalg.solve(N, left.T).T


def is_positive_definite(X: np.ndarray) -> bool:
    try:
        np.linalg.cholesky(np.asarray(X))
    except np.linalg.LinAlgError:
        return False
    return True
