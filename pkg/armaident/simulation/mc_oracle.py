# armaident/simulation/mc_oracle.py

"""
Monte Carlo estimate of the Fisher information from simulated score paths.

The score state xi_t follows xi_{t+1} = F xi_t + b_in eps_t from xi_0 = 0.
Because F is block-diagonal with companion blocks, each block is the lag
stack of a scalar AR recursion and is generated with scipy.signal.lfilter.
The average of xi_t xi_t^T / sigma2 estimates I(theta); standard errors
come from batch means since xi_t is serially dependent.

Noise is drawn from a Philox counter-based generator keyed by
(seed, replication), so the t-th draw of a replication never depends on
how replications are scheduled.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from scipy.signal import lfilter
from scipy.special import ndtri

from ..config import SIMULATION_DEFAULTS
from ..errors import BadConfig
from ..fisher import ArmaModel, fisher_information
from ..poly import product
from ..statespace import build_score_system

logger = logging.getLogger(__name__)

_U64 = 2 ** 64


class Realization(str, Enum):
    CONTROLLABLE = "controllable"
    OBSERVABLE = "observable"


@dataclass(frozen=True)
class SimConfig:
    """
    @param horizon      Retained steps per replication (T)
    @param burn_in      Discarded leading steps
    @param seed         Unsigned 64-bit key of the noise generator
    @param replications Independent paths, keyed by their index
    @param batches      Batch means per replication
    @param realization  controllable: (F, b_in); observable: xi = R(c, -a) Z with Z_{t+1} = G Z_t + e eps_t
    @param workers      Thread-pool size for replications (None: one per replication, capped at 8)
    """

    model: ArmaModel
    horizon: int = SIMULATION_DEFAULTS.horizon
    burn_in: int = SIMULATION_DEFAULTS.burn_in
    seed: int = SIMULATION_DEFAULTS.seed
    replications: int = SIMULATION_DEFAULTS.replications
    batches: int = SIMULATION_DEFAULTS.batches
    realization: Realization = Realization.CONTROLLABLE
    workers: Optional[int] = None

    def __post_init__(self):
        if self.horizon < 1000:
            raise BadConfig(f"horizon must be >= 1000, got {self.horizon}")
        if self.burn_in < 100:
            raise BadConfig(f"burn_in must be >= 100, got {self.burn_in}")
        if self.replications < 1:
            raise BadConfig(f"replications must be >= 1, got {self.replications}")
        if not 2 <= self.batches <= self.horizon // 10:
            raise BadConfig(
                f"batches must lie in 2..{self.horizon // 10} for horizon {self.horizon}, got {self.batches}"
            )
        if not 0 <= self.seed < _U64:
            raise BadConfig(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.workers is not None and self.workers < 1:
            raise BadConfig(f"workers must be >= 1, got {self.workers}")
        if self.model.dim == 0:
            raise BadConfig("model has no parameters (p + q = 0)")
        # accept plain strings from the CLI
        try:
            object.__setattr__(self, "realization", Realization(self.realization))
        except ValueError:
            raise BadConfig(
                f"realization must be one of {[r.value for r in Realization]}, got {self.realization!r}"
            ) from None


@dataclass(frozen=True)
class EmpiricalInfo:
    """
    @param mean    Sample average of xi_t xi_t^T / sigma2
    @param stderr  Entrywise batch-means standard error
    @param samples horizon * replications
    @param batches Batch means behind stderr
    """

    mean: np.ndarray
    stderr: np.ndarray
    samples: int
    batches: int


# ---------- Noise ----------


def gaussian_noise(seed: int, replication: int, n: int, sigma2: float = 1.0) -> np.ndarray:
    """
    n draws of N(0, sigma2) for one replication.

    Draw t uses Philox counter t under key (seed, replication); uniforms are
    the top 53 bits centred in their cell, mapped through the normal quantile.
    """
    key = np.array([seed % _U64, replication % _U64], dtype=np.uint64)
    bits = np.random.Philox(key=key).random_raw(n)
    u = ((bits >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0 ** -53
    return np.sqrt(sigma2) * ndtri(u)


# ---------- Score paths ----------


def _lag_stack(s: np.ndarray, k: int) -> np.ndarray:
    """Columns s_t, s_{t-1}, ..., s_{t-k+1} with zeros before the start."""
    out = np.zeros((len(s), k))
    for j in range(k):
        out[j:, j] = s[: len(s) - j]
    return out


def score_path(model: ArmaModel, eps: np.ndarray, realization: Realization = Realization.CONTROLLABLE) -> np.ndarray:
    """
    States xi_0, ..., xi_{n-1} (rows) driven by eps from xi_0 = 0.
    """
    if Realization(realization) is Realization.OBSERVABLE:
        g = product(model.a, model.c)
        z = lfilter([0.0, 1.0], g.coeffs, eps)
        C = build_score_system(model.a, model.c).C
        return _lag_stack(z, model.dim) @ C.T

    blocks = []
    if model.p:
        x = lfilter([0.0, 1.0], model.a.coeffs, eps)
        blocks.append(_lag_stack(x, model.p))
    if model.q:
        w = lfilter([0.0, -1.0], model.c.coeffs, eps)
        blocks.append(_lag_stack(w, model.q))
    return np.hstack(blocks)


def _replication(cfg: SimConfig, index: int) -> Tuple[np.ndarray, np.ndarray]:
    """Sum of xi xi^T / sigma2 over the retained path, and its batch means."""
    sigma2 = cfg.model.sigma2
    eps = gaussian_noise(cfg.seed, index, cfg.burn_in + cfg.horizon, sigma2)
    xi = score_path(cfg.model, eps, cfg.realization)[cfg.burn_in:]

    means = []
    total = np.zeros((cfg.model.dim, cfg.model.dim))
    for chunk in np.array_split(xi, cfg.batches):
        S = chunk.T @ chunk / sigma2
        total += S
        means.append(S / len(chunk))
    logger.debug("replication %d done (%d steps)", index, cfg.horizon)
    return total, np.stack(means)


def simulate_score_covariance(cfg: SimConfig) -> EmpiricalInfo:
    """
    Empirical Fisher matrix with batch-means standard errors.

    Replications may run on a thread pool; their results are combined in
    replication order, so the output does not depend on scheduling.
    """
    workers = cfg.workers or min(cfg.replications, 8)
    indices = list(range(cfg.replications))
    if workers == 1:
        results: List[Tuple[np.ndarray, np.ndarray]] = [_replication(cfg, i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda i: _replication(cfg, i), indices))

    total = np.zeros((cfg.model.dim, cfg.model.dim))
    for part, _ in results:
        total += part
    batch_means = np.concatenate([m for _, m in results])

    samples = cfg.horizon * cfg.replications
    mean = total / samples
    mean = 0.5 * (mean + mean.T)
    n_batches = batch_means.shape[0]
    stderr = batch_means.std(axis=0, ddof=1) / np.sqrt(n_batches)

    logger.info(
        "simulated %d steps x %d replications (%s realization)",
        cfg.horizon, cfg.replications, cfg.realization.value,
    )
    return EmpiricalInfo(mean=mean, stderr=stderr, samples=samples, batches=n_batches)


def stationary_recursion_check(model: ArmaModel, steps: int) -> float:
    """
    |i_steps / sigma2 - I|_F / |I|_F for i_{t+1} = F i_t F^T + sigma2 b_in b_in^T, i_0 = 0.
    """
    if steps < 0:
        raise BadConfig(f"steps must be >= 0, got {steps}")
    target = fisher_information(model)
    system = build_score_system(model.a, model.c)
    F = system.F
    drive = model.sigma2 * np.outer(system.b_in, system.b_in)

    i_t = np.zeros_like(target)
    for _ in range(steps):
        i_t = F @ i_t @ F.T + drive
    return float(np.linalg.norm(i_t / model.sigma2 - target) / np.linalg.norm(target))
