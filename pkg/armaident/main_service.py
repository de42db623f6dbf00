# armaident/main_service.py

"""
Payload builders shared by the command line and the HTTP service, plus
the FastAPI app.

Serve with:
    uvicorn armaident.main_service:app
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .bezout import bezout_matrix, kernel_basis
from .config import DEFAULT_TOLERANCES, SIMULATION_DEFAULTS
from .errors import DegreeMismatch, InputError, NumericalFailure
from .fisher import (
    ArmaModel,
    IdentReport,
    cramer_rao_bound,
    fisher_factorization,
    fisher_solution,
    identifiability_report,
)
from .serialization import to_jsonable
from .simulation import SimConfig, simulate_score_covariance, stationary_recursion_check
from .stein import stein_quartet
from .structmat import lu_singular, numerical_rank, resultant_det, resultant_det_from_roots, sylvester

logger = logging.getLogger(__name__)


# ---------- Model file ----------


class ModelFile(BaseModel):
    """
    JSON model description: {"ar": [a_1, ...], "ma": [c_1, ...], "sigma2": 1.0}.

    The unit constant terms are implicit.
    """

    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)

    ar: List[float] = Field(default_factory=list)
    ma: List[float] = Field(default_factory=list)
    sigma2: float = Field(default=1.0, gt=0)

    def to_model(self) -> ArmaModel:
        return ArmaModel.from_coefficients(self.ar, self.ma, self.sigma2)


def load_model_file(path: str) -> ModelFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read model file {path}: {exc}") from exc
    try:
        return ModelFile.model_validate_json(text)
    except ValidationError as exc:
        raise InputError(f"invalid model file {path}: {exc}") from exc


# ---------- Payload builders ----------


def _require_equal_degrees(model: ArmaModel) -> None:
    if model.p != model.q:
        raise DegreeMismatch(
            f"equal degrees required (p=q), got p={model.p}, q={model.q}"
        )


def build_fisher_payload(
    model: ArmaModel,
    tol: Optional[float] = None,
    oracle: bool = False,
    nobs: Optional[int] = None,
) -> Dict[str, Any]:
    solution = fisher_solution(model, oracle=oracle)
    rank, s = numerical_rank(solution.X, tol)

    payload: Dict[str, Any] = {}
    payload["fisher"] = solution.X
    payload["rank"] = rank
    payload["singular_values"] = s
    payload["residual"] = solution.residual
    payload["method"] = solution.method
    if oracle:
        payload["oracle_gap"] = solution.oracle_gap
    if nobs is not None:
        if rank == model.dim:
            payload["cramer_rao"] = cramer_rao_bound(model, nobs, tol)
        else:
            payload["cramer_rao"] = None
        payload["nobs"] = nobs
    return payload


def build_bezout_payload(model: ArmaModel, tol: Optional[float] = None) -> Dict[str, Any]:
    """B(c, a) with its rank."""
    _require_equal_degrees(model)
    B = bezout_matrix(model.c, model.a).entries
    rank, s = numerical_rank(B, tol)
    return {
        "n": model.p,
        "bezout": B,
        "rank": rank,
        "singular_values": s,
    }


def build_resultant_payload(model: ArmaModel) -> Dict[str, Any]:
    R = sylvester(model.c, model.a)
    return {
        "sylvester": R,
        "det": resultant_det(model.a, model.c),
        "det_from_roots": resultant_det_from_roots(model.a, model.c),
        "singular": lu_singular(R),
    }


def build_kernel_payload(model: ArmaModel, tol: Optional[float] = None) -> Dict[str, Any]:
    _require_equal_degrees(model)
    basis = kernel_basis(model.c, model.a, tol)
    return {
        "common_roots": [
            {"root": root, "multiplicity": mult} for root, mult in basis.common_roots
        ],
        "kernel": [v for v in basis.vectors],
        "residuals": basis.residuals,
        "dimension": len(basis),
    }


def build_stein_payload(model: ArmaModel, oracle: bool = False) -> Dict[str, Any]:
    """The Stein quartet and the residuals of the identities linking it."""
    quartet = stein_quartet(model.a, model.c, oracle=oracle)
    factorization = fisher_factorization(model)

    payload: Dict[str, Any] = {"I": quartet.I, "P": quartet.P}
    checks: Dict[str, float] = {"factorization": factorization.residual}
    if quartet.H is not None:
        payload["H"] = quartet.H
        payload["Q"] = quartet.Q
        checks.update(quartet.gaps)
    payload["checks"] = checks
    return payload


def report_to_payload(report: IdentReport) -> Dict[str, Any]:
    payload: Dict[str, Any] = {}
    payload["verdict"] = report.verdict
    payload["borderline"] = report.borderline
    payload["consistent"] = report.consistent
    payload["detectors"] = report.detectors
    payload["fisher"] = report.fisher
    payload["rank"] = report.rank
    payload["dim"] = report.dim
    payload["singular_values"] = report.singular_values
    payload["singular_value_gap"] = report.singular_value_gap
    payload["resultant_det"] = report.resultant_det
    payload["resultant_det_from_roots"] = report.resultant_det_from_roots
    payload["resultant_singular"] = report.resultant_singular
    payload["common_roots"] = [
        {"root": root, "multiplicity": mult} for root, mult in report.common_roots
    ]
    payload["bezout_rank"] = report.bezout_rank
    payload["kernel"] = None if report.kernel_basis is None else list(report.kernel_basis.vectors)
    return payload


def build_diagnose_payload(
    model: ArmaModel, tol: Optional[float] = None, oracle: bool = False
) -> Tuple[Dict[str, Any], IdentReport]:
    report = identifiability_report(model, tol, oracle)
    return report_to_payload(report), report


def build_simulate_payload(
    model: ArmaModel,
    seed: int = SIMULATION_DEFAULTS.seed,
    horizon: int = SIMULATION_DEFAULTS.horizon,
    burn_in: int = SIMULATION_DEFAULTS.burn_in,
    replications: int = SIMULATION_DEFAULTS.replications,
    batches: int = SIMULATION_DEFAULTS.batches,
    realization: str = "controllable",
    workers: Optional[int] = None,
    steps: int = SIMULATION_DEFAULTS.recursion_steps,
) -> Dict[str, Any]:
    cfg = SimConfig(
        model=model,
        horizon=horizon,
        burn_in=burn_in,
        seed=seed,
        replications=replications,
        batches=batches,
        realization=realization,
        workers=workers,
    )
    empirical = simulate_score_covariance(cfg)
    analytic = fisher_solution(model).X

    with np.errstate(divide="ignore", invalid="ignore"):
        z = np.abs(empirical.mean - analytic) / empirical.stderr
    max_z = float(np.max(z[np.isfinite(z)])) if np.any(np.isfinite(z)) else None

    return {
        "mean": empirical.mean,
        "stderr": empirical.stderr,
        "samples": empirical.samples,
        "batches": empirical.batches,
        "seed": seed,
        "realization": cfg.realization,
        "analytic": analytic,
        "max_z": max_z,
        "steps": steps,
        "recursion_residual": stationary_recursion_check(model, steps),
    }


# ---------- FastAPI app setup ----------

app = FastAPI(
    title="armaident",
    description="Fisher information and identifiability of ARMA models",
    version="0.1.0",
)


def _run(builder, body: ModelFile, *args, **kwargs) -> Dict[str, Any]:
    """Build the model and a payload, mapping package errors to HTTP status codes."""
    try:
        result = builder(body.to_model(), *args, **kwargs)
    except InputError as e:
        raise HTTPException(status_code=400, detail=str(e))
    except NumericalFailure as e:
        raise HTTPException(status_code=500, detail=f"Numerical failure: {str(e)}")
    return to_jsonable(result)


def _diagnose_only(model: ArmaModel, tol: float, oracle: bool) -> Dict[str, Any]:
    payload, _ = build_diagnose_payload(model, tol, oracle)
    return payload


# ---------- API routes ----------


@app.get("/health")
async def health_check() -> Dict[str, str]:
    return {"status": "ok"}


@app.post("/fisher")
async def fisher(
    body: ModelFile,
    tol: float = DEFAULT_TOLERANCES.rank_tol,
    oracle: bool = False,
    nobs: Optional[int] = None,
) -> Dict[str, Any]:
    return _run(build_fisher_payload, body, tol, oracle, nobs)


@app.post("/bezout")
async def bezout(body: ModelFile, tol: float = DEFAULT_TOLERANCES.rank_tol) -> Dict[str, Any]:
    return _run(build_bezout_payload, body, tol)


@app.post("/resultant")
async def resultant(body: ModelFile) -> Dict[str, Any]:
    return _run(build_resultant_payload, body)


@app.post("/kernel")
async def kernel(body: ModelFile, tol: float = DEFAULT_TOLERANCES.kernel_tol) -> Dict[str, Any]:
    return _run(build_kernel_payload, body, tol)


@app.post("/stein")
async def stein(body: ModelFile, oracle: bool = False) -> Dict[str, Any]:
    return _run(build_stein_payload, body, oracle)


@app.post("/diagnose")
async def diagnose(
    body: ModelFile,
    tol: float = DEFAULT_TOLERANCES.rank_tol,
    oracle: bool = False,
) -> Dict[str, Any]:
    return _run(_diagnose_only, body, tol, oracle)


@app.post("/simulate")
async def simulate(
    body: ModelFile,
    seed: int = SIMULATION_DEFAULTS.seed,
    horizon: int = SIMULATION_DEFAULTS.horizon,
    burn_in: int = SIMULATION_DEFAULTS.burn_in,
    replications: int = SIMULATION_DEFAULTS.replications,
    batches: int = SIMULATION_DEFAULTS.batches,
    realization: str = "controllable",
    workers: Optional[int] = None,
    steps: int = SIMULATION_DEFAULTS.recursion_steps,
) -> Dict[str, Any]:
    return _run(
        build_simulate_payload, body, seed=seed, horizon=horizon, burn_in=burn_in,
        replications=replications, batches=batches, realization=realization,
        workers=workers, steps=steps,
    )


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=8000)
