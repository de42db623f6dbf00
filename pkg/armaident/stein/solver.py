# armaident/stein/solver.py

"""
Solvers for the Stein equation X = A X A^T + Q.

solve_stein sums the series X = sum_k A^k Q (A^T)^k by doubling:
    X <- X + A_k X A_k^T,   A_k <- A_k^2
which needs only O(log) matrix products. solve_stein_kron solves the
vectorized system (I - A (x) A) vec X = vec Q and serves as an oracle.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from ..config import DEFAULT_TOLERANCES
from ..errors import BadDimension, DimensionMismatch, NoConvergence, NotStable, SingularSystem
from ..structmat import lu_singular

logger = logging.getLogger(__name__)


class SteinMethod(str, Enum):
    DOUBLING = "doubling"
    KRONECKER = "kronecker"


@dataclass(frozen=True)
class SteinSolution:
    """
    @param X          Symmetrized solution
    @param residual   |X - A X A^T - Q|_F / |Q|_F
    @param method     Solver that produced X
    @param iterations Doublings performed (0 for Kronecker)
    @param oracle_gap Relative gap to the Kronecker solution, when requested
    @param backward_error |X - A X A^T - Q|_F / (|Q|_F + |A|_F^2 |X|_F)
    """

    X: np.ndarray
    residual: float
    method: SteinMethod
    iterations: int = 0
    oracle_gap: Optional[float] = None
    backward_error: float = 0.0


def _validate(A: np.ndarray, Q: np.ndarray):
    A = np.asarray(A, dtype=float)
    Q = np.asarray(Q, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"A must be square, got shape {A.shape}")
    if Q.shape != A.shape:
        raise DimensionMismatch(f"Q must have shape {A.shape}, got {Q.shape}")
    return A, Q


def stein_residual(A: np.ndarray, Q: np.ndarray, X: np.ndarray) -> float:
    scale = float(np.linalg.norm(Q))
    r = float(np.linalg.norm(X - A @ X @ A.T - Q))
    return r / scale if scale > 0.0 else r


def backward_error(A: np.ndarray, Q: np.ndarray, X: np.ndarray) -> float:
    """Residual measured against the size of the terms that produce it."""
    r = float(np.linalg.norm(X - A @ X @ A.T - Q))
    scale = float(np.linalg.norm(Q)) + float(np.linalg.norm(A)) ** 2 * float(np.linalg.norm(X))
    return r / scale if scale > 0.0 else r


def spectral_radius(A: np.ndarray) -> float:
    if A.size == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvals(A))))


def solve_stein_kron(A: np.ndarray, Q: np.ndarray) -> SteinSolution:
    """
    Kronecker oracle with row-major vec: vec(A X A^T) = (A (x) A) vec X.

    @raises BadDimension above the configured size limit.
    @raises SingularSystem when I - A (x) A is numerically singular.
    """
    A, Q = _validate(A, Q)
    m = A.shape[0]
    if m > DEFAULT_TOLERANCES.kron_max_dim:
        raise BadDimension(
            f"Kronecker solve limited to m <= {DEFAULT_TOLERANCES.kron_max_dim}, got {m}"
        )
    if m == 0:
        return SteinSolution(X=np.zeros((0, 0)), residual=0.0, method=SteinMethod.KRONECKER)

    K = np.eye(m * m) - np.kron(A, A)
    if lu_singular(K):
        raise SingularSystem("I - A (x) A is singular; A has eigenvalues with product 1")
    X = lu_solve(lu_factor(K), Q.reshape(-1)).reshape(m, m)
    X = 0.5 * (X + X.T)
    return SteinSolution(
        X=X, residual=stein_residual(A, Q, X), method=SteinMethod.KRONECKER,
        backward_error=backward_error(A, Q, X),
    )


def _doubling(A: np.ndarray, Q: np.ndarray, tol: float) -> Tuple[np.ndarray, int]:
    """Doubling sweeps until |A_k|_F^2 |X_k|_F <= tol."""
    X = Q.copy()
    Ak = A.copy()
    iterations = 0
    for iterations in range(1, DEFAULT_TOLERANCES.stein_max_doublings + 1):
        X = X + Ak @ X @ Ak.T
        Ak = Ak @ Ak
        if float(np.linalg.norm(Ak)) ** 2 * float(np.linalg.norm(X)) <= tol:
            return 0.5 * (X + X.T), iterations
    raise NoConvergence(
        f"doubling did not converge in {iterations} steps (spectral radius {spectral_radius(A):.6g})"
    )


def solve_stein(
    A: np.ndarray,
    Q: np.ndarray,
    tol: Optional[float] = None,
    oracle: bool = False,
) -> SteinSolution:
    """
    Unique solution of X = A X A^T + Q for a stable A.

    When the residual relative to |Q| exceeds the configured residual
    tolerance, one correction D = A D A^T + (Q - X + A X A^T) is added.
    Acceptance is decided on the backward error, which stays small when
    |X| is much larger than |Q|.

    @raises NotStable if the spectral radius of A is not below 1 - margin.
    @raises NoConvergence if the doubling tail does not fall below tol
            within the configured number of doublings, or the backward
            error is above the configured residual tolerance.
    """
    tol = DEFAULT_TOLERANCES.stein_tol if tol is None else tol
    A, Q = _validate(A, Q)
    m = A.shape[0]
    if m == 0:
        return SteinSolution(X=np.zeros((0, 0)), residual=0.0, method=SteinMethod.DOUBLING)

    rho = spectral_radius(A)
    if rho >= 1.0 - DEFAULT_TOLERANCES.stability_margin:
        raise NotStable(f"spectral radius {rho:.6g} is not inside the unit circle")

    limit = DEFAULT_TOLERANCES.stein_residual_tol
    X, iterations = _doubling(A, Q, tol)
    residual = stein_residual(A, Q, X)
    if residual > limit:
        R = Q - X + A @ X @ A.T
        D, extra = _doubling(A, 0.5 * (R + R.T), tol)
        X = X + D
        iterations += extra
        residual = stein_residual(A, Q, X)
        logger.debug("Stein refinement: residual %.3e after one correction", residual)

    backward = backward_error(A, Q, X)
    logger.debug(
        "Stein doubling: m=%d, %d doublings, residual %.3e, backward error %.3e",
        m, iterations, residual, backward,
    )
    if backward > limit:
        raise NoConvergence(
            f"Stein backward error {backward:.3e} above {limit:.1e}",
            residual=residual,
        )

    gap = None
    if oracle:
        if m <= DEFAULT_TOLERANCES.kron_max_dim:
            check = solve_stein_kron(A, Q)
            gap = float(np.linalg.norm(X - check.X) / max(np.linalg.norm(X), 1e-300))
            if gap > limit:
                logger.warning("doubling and Kronecker solutions differ: relative gap %.3e", gap)
        else:
            logger.info("oracle skipped: m=%d exceeds the Kronecker size limit", m)

    return SteinSolution(
        X=X, residual=residual, method=SteinMethod.DOUBLING,
        iterations=iterations, oracle_gap=gap, backward_error=backward,
    )
