# armaident/main.py

"""
Command line entry point.

    python -m armaident.main <command> --model m.json [flags]

Commands: fisher, bezout, resultant, kernel, stein, diagnose, simulate.
Results go to standard output as JSON; diagnostics and the diagnose report
go to standard error.

Exit codes: 0 success, 2 invalid input, 3 numerical failure,
4 singular verdict with --fail-on-singular.
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from .config import DEFAULT_TOLERANCES, SIMULATION_DEFAULTS, configure_logging
from .errors import InputError, NumericalFailure
from .fisher import Verdict, render_report
from .main_service import (
    build_bezout_payload,
    build_diagnose_payload,
    build_fisher_payload,
    build_kernel_payload,
    build_resultant_payload,
    build_simulate_payload,
    build_stein_payload,
    load_model_file,
)
from .serialization import dumps17

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3
EXIT_SINGULAR = 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", required=True, help="JSON model file with ar, ma, sigma2")
    common.add_argument("--tol", type=float, default=DEFAULT_TOLERANCES.rank_tol,
                        help="rank / kernel tolerance (default %(default)s)")
    common.add_argument("--oracle", action="store_true",
                        help="cross-check Stein solves with the Kronecker solver")
    common.add_argument("--fail-on-singular", action="store_true",
                        help="exit 4 when the diagnose verdict is singular")
    common.add_argument("--verbose", action="store_true", help="DEBUG logging on stderr")

    parser = argparse.ArgumentParser(
        prog="armaident",
        description="Fisher information and identifiability of ARMA(p,q) models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fisher = sub.add_parser("fisher", parents=[common], help="asymptotic Fisher information")
    fisher.add_argument("--nobs", type=int, default=None,
                        help="also emit the Cramer-Rao bound for this many observations")

    sub.add_parser("bezout", parents=[common], help="Bezout matrix B(c,a) (p = q)")
    sub.add_parser("resultant", parents=[common], help="Sylvester matrix R(c,-a) and its determinant")
    sub.add_parser("kernel", parents=[common], help="kernel basis of B(c,a) (p = q)")
    sub.add_parser("stein", parents=[common], help="Stein quartet I, P, H, Q")
    sub.add_parser("diagnose", parents=[common], help="identifiability report")

    simulate = sub.add_parser("simulate", parents=[common], help="Monte Carlo Fisher estimate")
    simulate.add_argument("--seed", type=int, default=SIMULATION_DEFAULTS.seed)
    simulate.add_argument("--horizon", type=int, default=SIMULATION_DEFAULTS.horizon)
    simulate.add_argument("--burn-in", type=int, default=SIMULATION_DEFAULTS.burn_in)
    simulate.add_argument("--replications", type=int, default=SIMULATION_DEFAULTS.replications)
    simulate.add_argument("--batches", type=int, default=SIMULATION_DEFAULTS.batches)
    simulate.add_argument("--realization", choices=["controllable", "observable"], default="controllable")
    simulate.add_argument("--workers", type=int, default=None)
    simulate.add_argument("--steps", type=int, default=SIMULATION_DEFAULTS.recursion_steps,
                          help="steps of the covariance recursion check")
    return parser


def _dispatch(args: argparse.Namespace, stderr: TextIO):
    """Returns (payload, exit code)."""
    model = load_model_file(args.model).to_model()

    if args.command == "fisher":
        return build_fisher_payload(model, args.tol, args.oracle, args.nobs), EXIT_OK
    if args.command == "bezout":
        return build_bezout_payload(model, args.tol), EXIT_OK
    if args.command == "resultant":
        return build_resultant_payload(model), EXIT_OK
    if args.command == "kernel":
        return build_kernel_payload(model, args.tol), EXIT_OK
    if args.command == "stein":
        return build_stein_payload(model, args.oracle), EXIT_OK
    if args.command == "diagnose":
        payload, report = build_diagnose_payload(model, args.tol, args.oracle)
        stderr.write(render_report(report, model.p, model.q))
        singular = report.verdict is Verdict.SINGULAR
        return payload, EXIT_SINGULAR if (singular and args.fail_on_singular) else EXIT_OK
    if args.command == "simulate":
        payload = build_simulate_payload(
            model,
            seed=args.seed,
            horizon=args.horizon,
            burn_in=args.burn_in,
            replications=args.replications,
            batches=args.batches,
            realization=args.realization,
            workers=args.workers,
            steps=args.steps,
        )
        return payload, EXIT_OK
    raise InputError(f"unknown command {args.command}")


def run(
    argv: Optional[List[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT

    configure_logging(args.verbose, stderr)

    try:
        payload, code = _dispatch(args, stderr)
    except InputError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    except NumericalFailure as e:
        stderr.write(f"numerical failure: {e}\n")
        return EXIT_NUMERICAL

    stdout.write(dumps17(payload) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(run())
