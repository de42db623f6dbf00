# armaident/poly/roots.py

"""
Zeros of reciprocal polynomials and common-root detection.

The zeros of p^ are the factor parameters alpha_i of p(z) = prod(1 - alpha_i z).
They are found by Aberth-Ehrlich simultaneous iteration on the monic p^
and then grouped into clusters to assign multiplicities. An m-fold zero
leaves m approximations spread over roughly (residual m! / |p^(m)|)^(1/m),
which is far wider than a fixed cluster radius once m >= 3.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..config import DEFAULT_TOLERANCES
from ..errors import NoConvergence
from .polynomial import Polynomial

logger = logging.getLogger(__name__)

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class RootSet:
    """
    Distinct zeros of p^ with their multiplicities.

    @param roots Cluster centres, real ones first (ascending), then complex by real part.
    @param multiplicities One count per entry of roots; they sum to the degree.
    @param residual Largest |p^(z)| over the raw iterates.
    @param iterations Aberth sweeps performed.
    """

    roots: Tuple[complex, ...]
    multiplicities: Tuple[int, ...]
    residual: float
    iterations: int = 0

    def expanded(self) -> np.ndarray:
        """Every zero repeated by its multiplicity."""
        if not self.roots:
            return np.empty(0, dtype=complex)
        return np.repeat(np.array(self.roots, dtype=complex), self.multiplicities)

    @property
    def spectral_radius(self) -> float:
        if not self.roots:
            return 0.0
        return float(max(abs(r) for r in self.roots))

    def __len__(self) -> int:
        return len(self.roots)


# ---------- Aberth-Ehrlich ----------


def _initial_guesses(n: int, radius: float) -> np.ndarray:
    # offset angle keeps guesses off the real axis and away from symmetric traps
    angles = 2.0 * np.pi * np.arange(n) / n + 0.4
    return radius * np.exp(1j * angles)


def _rounding_floor(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Attainable |p^(z)| in floating point: 16 eps sum |c_k| |z|^k."""
    return 16.0 * EPS * np.polyval(np.abs(coeffs), np.abs(z))


def _aberth(
    coeffs: np.ndarray, radius: float, tol: float, max_iter: int
) -> Tuple[np.ndarray, int]:
    """
    Run the iteration on descending monic coefficients.

    Returns the approximations and the number of sweeps.
    """
    n = len(coeffs) - 1
    dcoeffs = np.polyder(coeffs)
    z = _initial_guesses(n, radius)

    for it in range(1, max_iter + 1):
        pz = np.polyval(coeffs, z)
        dpz = np.polyval(dcoeffs, z)

        if np.all(np.abs(pz) <= _rounding_floor(coeffs, z)):
            return z, it - 1

        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dpz != 0, pz / dpz, pz)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            repulsion = inv.sum(axis=1)
            step = ratio / (1.0 - ratio * repulsion)

        step = np.where(np.isfinite(step), step, ratio)
        z = z - step

        if np.max(np.abs(step)) <= tol * max(1.0, float(np.max(np.abs(z)))):
            return z, it

    return z, max_iter


def _polish(coeffs: np.ndarray, z: complex, multiplicity: int, steps: int = 5) -> complex:
    """
    Newton on the (m-1)-th derivative, where a zero of multiplicity m is simple.
    """
    if multiplicity < 2:
        return z
    f = np.polyder(coeffs, multiplicity - 1)
    df = np.polyder(f)
    for _ in range(steps):
        d = np.polyval(df, z)
        if d == 0:
            break
        step = np.polyval(f, z) / d
        z = z - step
        if abs(step) <= EPS * max(1.0, abs(z)):
            break
    return complex(z)


def _spread_limit(coeffs: np.ndarray, centre: complex, m: int, level: float) -> float:
    """
    Largest spread of m approximations to an m-fold zero whose residuals
    sit at level: |z - centre| ~ (level / |p^(m)(centre) / m!|)^(1/m).
    """
    lead = abs(np.polyval(np.polyder(coeffs, m), centre)) / math.factorial(m)
    if lead == 0.0:
        return 0.0
    return 4.0 * (level / lead) ** (1.0 / m)


def _accept_group(
    coeffs: np.ndarray, z: np.ndarray, values: np.ndarray, idx: List[int], radius: float
) -> Optional[complex]:
    """Polished centre if the approximations idx behave like one zero of multiplicity len(idx)."""
    m = len(idx)
    centre = complex(np.mean(z[idx]))
    spread = float(np.max(np.abs(z[idx] - centre)))
    level = max(float(np.max(values[idx])), float(_rounding_floor(coeffs, centre)))
    limit = max(radius, _spread_limit(coeffs, centre, m, level))
    if spread > limit:
        return None

    # the (m-1)-th derivative must vanish near the centre
    polished = _polish(coeffs, centre, m)
    if abs(polished - centre) > limit:
        return None
    f = np.polyder(coeffs, m - 1)
    if abs(np.polyval(f, polished)) > 1e3 * float(_rounding_floor(f, polished)):
        return None
    return polished


def _group(
    coeffs: np.ndarray, z: np.ndarray, values: np.ndarray, radius: float
) -> List[Tuple[List[int], complex]]:
    """
    Partition the approximations into zeros with multiplicities.

    Every approximation seeds candidate groups of itself and its m-1
    nearest neighbours; accepted candidates are taken largest first,
    without overlap. The rest are simple zeros.
    """
    n = len(z)
    candidates = []
    for i in range(n):
        order = np.argsort(np.abs(z - z[i]), kind="stable")
        for m in range(2, n + 1):
            idx = sorted(int(k) for k in order[:m])
            centre = _accept_group(coeffs, z, values, idx, radius)
            if centre is not None:
                candidates.append((-m, tuple(idx), centre))
    candidates.sort(key=lambda t: (t[0], t[1]))

    taken = set()
    groups = []
    for _, idx, centre in candidates:
        if taken.isdisjoint(idx):
            taken.update(idx)
            groups.append((list(idx), centre))
    for i in range(n):
        if i not in taken:
            groups.append(([i], complex(z[i])))
    return groups


def _sort_key(root: complex):
    return (abs(root.imag) > 0.0, round(root.real, 12), -root.imag)


def roots_of_reciprocal(
    p: Polynomial,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
    cluster_radius: Optional[float] = None,
) -> RootSet:
    """
    All zeros of the monic reciprocal polynomial p^ with multiplicities.

    Degree 0 gives an empty RootSet.

    @raises NoConvergence if the best residual still exceeds tol (or the
            rounding floor, when that is larger) after max_iter sweeps.
    """
    tol = DEFAULT_TOLERANCES.root_tol if tol is None else tol
    max_iter = DEFAULT_TOLERANCES.root_max_iter if max_iter is None else max_iter
    radius = DEFAULT_TOLERANCES.cluster_radius if cluster_radius is None else cluster_radius

    n = p.degree
    if n == 0:
        return RootSet(roots=(), multiplicities=(), residual=0.0, iterations=0)

    # descending coefficients of p^ are the ascending coefficients of p
    coeffs = np.asarray(p.coeffs, dtype=float)

    if n == 1:
        root = complex(-coeffs[1])
        return RootSet(roots=(root,), multiplicities=(1,), residual=0.0, iterations=0)

    z, iterations = _aberth(coeffs, DEFAULT_TOLERANCES.root_initial_radius, tol, max_iter)

    values = np.abs(np.polyval(coeffs, z))
    floors = _rounding_floor(coeffs, z)
    residual = float(np.max(values))
    if np.any(values > np.maximum(tol, floors)):
        raise NoConvergence(
            f"root finder stopped at residual {residual:.3e} after {iterations} sweeps "
            f"(degree {n}, tol {tol:.1e})",
            residual=residual,
        )

    centres = []
    counts = []
    for group, centre in _group(coeffs, z, values, radius):
        if abs(centre.imag) <= radius:
            centre = complex(centre.real, 0.0)
        centres.append(centre)
        counts.append(len(group))

    order = sorted(range(len(centres)), key=lambda k: _sort_key(centres[k]))
    logger.debug(
        "degree %d: %d sweeps, residual %.3e, %d distinct zeros",
        n, iterations, residual, len(centres),
    )
    return RootSet(
        roots=tuple(centres[k] for k in order),
        multiplicities=tuple(counts[k] for k in order),
        residual=residual,
        iterations=iterations,
    )


def common_roots(
    a: Polynomial,
    c: Polynomial,
    tol: Optional[float] = None,
) -> List[Tuple[complex, int]]:
    """
    Zeros shared by a^ and c^.

    Clusters are paired greedily by distance; a pair within tol is reported
    once at the midpoint, with the smaller of the two multiplicities
    (the multiplicity of the common factor).
    """
    tol = DEFAULT_TOLERANCES.common_root_tol if tol is None else tol
    ra = roots_of_reciprocal(a)
    rc = roots_of_reciprocal(c)

    candidates = []
    for i, alpha in enumerate(ra.roots):
        for j, gamma in enumerate(rc.roots):
            dist = abs(alpha - gamma)
            if dist <= tol:
                candidates.append((dist, i, j))
    candidates.sort()

    used_a, used_c = set(), set()
    out = []
    for _, i, j in candidates:
        if i in used_a or j in used_c:
            continue
        used_a.add(i)
        used_c.add(j)
        root = 0.5 * (ra.roots[i] + rc.roots[j])
        mult = min(ra.multiplicities[i], rc.multiplicities[j])
        out.append((root, mult))

    out.sort(key=lambda rm: _sort_key(rm[0]))
    return out
