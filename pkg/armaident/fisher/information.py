# armaident/fisher/information.py

"""
Asymptotic Fisher information of a stationary ARMA(p, q) model and the
identifiability verdict.

The information matrix of theta = (a_1..a_p, c_1..c_q) solves
    I = F I F^T + b_in b_in^T
and factors as I = R(c, -a) P R(c, -a)^T with P positive definite, so it
is singular exactly when a and c share a factor. The verdict combines
four detectors: the rank of I, the resultant, common zeros, and (for
p = q) the rank of the Bezout matrix.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..bezout import KernelBasis, bezout_matrix, kernel_basis
from ..config import DEFAULT_TOLERANCES
from ..errors import InputError, NotStable, SingularSystem
from ..poly import Polynomial, common_roots, from_tail
from ..statespace import build_score_system, stability_check
from ..stein import SteinSolution, solve_stein
from ..structmat import basis_vector, lu_singular, numerical_rank, resultant_det, resultant_det_from_roots, sylvester

logger = logging.getLogger(__name__)


# ---------- Model ----------


@dataclass(frozen=True)
class ArmaModel:
    """
    a(L) y = c(L) eps with Var(eps) = sigma2.

    Construction checks that a and c are causal and invertible
    (zeros of a^ and c^ strictly inside the unit circle).
    """

    a: Polynomial
    c: Polynomial
    sigma2: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma2) and self.sigma2 > 0.0):
            raise InputError(f"sigma2 must be a positive finite number, got {self.sigma2!r}")
        for name, poly in (("AR", self.a), ("MA", self.c)):
            report = stability_check(poly)
            if not report.stable:
                raise NotStable(
                    f"{name} polynomial has a zero of its reciprocal at modulus "
                    f"{report.spectral_radius:.6g} (must be < 1)"
                )

    @classmethod
    def from_coefficients(
        cls, ar: Sequence[float], ma: Sequence[float], sigma2: float = 1.0
    ) -> "ArmaModel":
        """Build from (a_1..a_p) and (c_1..c_q); the unit constant terms are implicit."""
        return cls(a=from_tail(ar), c=from_tail(ma), sigma2=float(sigma2))

    @property
    def p(self) -> int:
        return self.a.degree

    @property
    def q(self) -> int:
        return self.c.degree

    @property
    def dim(self) -> int:
        return self.p + self.q

    @property
    def theta(self) -> np.ndarray:
        return np.concatenate([self.a.tail, self.c.tail])


def _require_parameters(model: ArmaModel) -> None:
    if model.dim == 0:
        raise InputError("model has no parameters (p + q = 0)")


# ---------- Fisher matrix ----------


def fisher_solution(model: ArmaModel, tol: Optional[float] = None, oracle: bool = False) -> SteinSolution:
    """Stein solution of I = F I F^T + b_in b_in^T; sigma2 does not enter."""
    _require_parameters(model)
    system = build_score_system(model.a, model.c)
    return solve_stein(system.F, np.outer(system.b_in, system.b_in), tol, oracle)


def fisher_information(model: ArmaModel, tol: Optional[float] = None, oracle: bool = False) -> np.ndarray:
    return fisher_solution(model, tol, oracle).X


@dataclass(frozen=True)
class FisherFactorization:
    R: np.ndarray
    P: np.ndarray
    residual: float


def fisher_factorization(model: ArmaModel, tol: Optional[float] = None) -> FisherFactorization:
    """
    I = R P R^T with R = R(c, -a) and P solving P = G P G^T + e e^T.

    residual is |I - R P R^T|_F / |I|_F.
    """
    _require_parameters(model)
    system = build_score_system(model.a, model.c)
    e = basis_vector(system.dim, 0)
    P = solve_stein(system.G, np.outer(e, e), tol).X
    info = solve_stein(system.F, np.outer(system.b_in, system.b_in), tol).X

    R = system.C
    residual = float(np.linalg.norm(info - R @ P @ R.T) / np.linalg.norm(info))
    return FisherFactorization(R=R, P=P, residual=residual)


def cramer_rao_bound(model: ArmaModel, n_obs: int, tol: Optional[float] = None) -> np.ndarray:
    """
    I^{-1} / n_obs, the asymptotic covariance of an efficient estimator of theta.

    @raises SingularSystem when I is rank deficient (theta not identifiable).
    """
    if n_obs < 1:
        raise InputError(f"n_obs must be >= 1, got {n_obs}")
    info = fisher_information(model)
    rank, _ = numerical_rank(info, tol)
    if rank < model.dim:
        raise SingularSystem(
            f"Fisher matrix has rank {rank} < {model.dim}; no Cramer-Rao bound"
        )
    return np.linalg.inv(info) / n_obs


# ---------- Identifiability ----------


class Verdict(str, Enum):
    IDENTIFIABLE = "identifiable"
    SINGULAR = "singular"


@dataclass(frozen=True)
class IdentReport:
    """
    Outcome of identifiability_report.

    singular_value_gap is sigma_r / sigma_{r+1} at the rank cut r, or None
    when the Fisher matrix has full rank (or is zero).
    bezout_rank and kernel_basis are None unless p == q.
    """

    fisher: np.ndarray
    rank: int
    dim: int
    singular_values: np.ndarray
    singular_value_gap: Optional[float]
    resultant_det: float
    resultant_det_from_roots: float
    resultant_singular: bool
    common_roots: List[Tuple[complex, int]]
    bezout_rank: Optional[int]
    kernel_basis: Optional[KernelBasis]
    verdict: Verdict
    detectors: Dict[str, Verdict] = field(default_factory=dict)
    consistent: bool = True
    borderline: bool = False


def _verdict(is_singular: bool) -> Verdict:
    return Verdict.SINGULAR if is_singular else Verdict.IDENTIFIABLE


def identifiability_report(
    model: ArmaModel,
    tol: Optional[float] = None,
    oracle: bool = False,
) -> IdentReport:
    """
    Run every singularity detector and arbitrate.

    Detectors that disagree make the verdict singular and mark it borderline.
    """
    tol = DEFAULT_TOLERANCES.rank_tol if tol is None else tol
    _require_parameters(model)
    a, c = model.a, model.c

    info = fisher_information(model, oracle=oracle)
    rank, s = numerical_rank(info, tol)
    gap = None
    if 0 < rank < len(s):
        gap = float(s[rank - 1] / s[rank]) if s[rank] > 0.0 else math.inf

    det = resultant_det(a, c)
    det_roots = resultant_det_from_roots(a, c)
    res_singular = lu_singular(sylvester(c, a))
    shared = common_roots(a, c)

    detectors = {
        "fisher_rank": _verdict(rank < model.dim),
        "resultant": _verdict(res_singular),
        "common_roots": _verdict(bool(shared)),
    }

    bezout_rank = None
    kernel = None
    if model.p == model.q:
        B = bezout_matrix(c, a).entries
        bezout_rank, _ = numerical_rank(B, tol)
        kernel = kernel_basis(c, a)
        detectors["bezout_rank"] = _verdict(bezout_rank < model.p)

    votes = set(detectors.values())
    consistent = len(votes) == 1
    verdict = Verdict.SINGULAR if Verdict.SINGULAR in votes else Verdict.IDENTIFIABLE
    if not consistent:
        logger.warning(
            "detectors disagree (%s); reporting singular as borderline",
            ", ".join(f"{k}={v.value}" for k, v in detectors.items()),
        )

    logger.debug(
        "p=%d q=%d: rank %d, det %.3e, %d common zeros, verdict %s",
        model.p, model.q, rank, det, len(shared), verdict.value,
    )
    return IdentReport(
        fisher=info,
        rank=rank,
        dim=model.dim,
        singular_values=s,
        singular_value_gap=gap,
        resultant_det=det,
        resultant_det_from_roots=det_roots,
        resultant_singular=res_singular,
        common_roots=shared,
        bezout_rank=bezout_rank,
        kernel_basis=kernel,
        verdict=verdict,
        detectors=detectors,
        consistent=consistent,
        borderline=not consistent,
    )
