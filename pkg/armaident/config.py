# armaident/config.py

"""
Numerical thresholds and defaults shared by every module.

Everything is configured through these objects or explicit arguments;
nothing is read from the environment.
"""

import logging
import sys
from dataclasses import dataclass
from typing import Optional, TextIO


@dataclass(frozen=True)
class Tolerances:
    """
    Thresholds used by the solvers and detectors.

    Operations that accept a tolerance argument fall back to the
    matching field of DEFAULT_TOLERANCES when given None.
    """

    # root finding (Aberth-Ehrlich on the monic reciprocal polynomial)
    root_tol: float = 1e-12
    root_max_iter: int = 200
    root_initial_radius: float = 0.8
    cluster_radius: float = 1e-6
    common_root_tol: float = 1e-8

    # factor peeling / factor-parameter lists
    deflation_tol: float = 1e-8
    factorization_tol: float = 1e-8

    # rank and determinant decisions
    rank_tol: float = 1e-8
    det_tol: float = 1e-10
    stability_margin: float = 1e-8
    pole_tol: float = 1e-12

    # Stein equations
    stein_tol: float = 1e-13
    stein_max_doublings: int = 100
    stein_residual_tol: float = 1e-8
    kron_max_dim: int = 12
    quartet_identity_tol: float = 1e-9

    # a kernel vector v is accepted when |Bv| <= kernel_tol * |B| * |v|
    kernel_tol: float = 1e-8


@dataclass(frozen=True)
class SimulationDefaults:
    horizon: int = 500_000
    burn_in: int = 2000
    batches: int = 50
    seed: int = 42
    replications: int = 1
    recursion_steps: int = 200


# Shared instances (one per process)
DEFAULT_TOLERANCES = Tolerances()
SIMULATION_DEFAULTS = SimulationDefaults()


LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"


_HANDLER_NAME = "armaident"


def configure_logging(verbose: bool = False, stream: Optional[TextIO] = None) -> None:
    """
    Send package logs to stream (standard error by default); DEBUG when
    verbose, else WARNING. Calling again replaces the previous handler.
    """
    root = logging.getLogger("armaident")
    for handler in list(root.handlers):
        if handler.get_name() == _HANDLER_NAME:
            root.removeHandler(handler)

    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt="%H:%M:%S"))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)
