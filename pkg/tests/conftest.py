# tests/conftest.py

import json
import logging
from typing import Sequence, Tuple

import numpy as np
import pytest

from armaident.fisher import ArmaModel
from armaident.poly import Polynomial, from_factor_parameters

# well separated zeros for rank-sensitive families
ROOT_POOL = (-0.7, -0.45, -0.2, 0.15, 0.4, 0.65)

# wider families: a-only zeros left, c-only zeros right, shared zeros near 0
A_ONLY_POOL = (-0.8, -0.65, -0.5, -0.35)
C_ONLY_POOL = (0.35, 0.5, 0.65, 0.8)
SHARED_POOL = (-0.05, 0.05)


def poly_from_roots(roots: Sequence[complex]) -> Polynomial:
    """prod (1 - r z) for the given zeros of the reciprocal polynomial."""
    return from_factor_parameters(list(roots))


def random_stable(rng: np.random.Generator, degree: int, radius: float = 0.85) -> Polynomial:
    """Random real polynomial whose reciprocal has zeros inside |z| < radius."""
    roots = []
    while len(roots) < degree:
        if degree - len(roots) >= 2 and rng.random() < 0.4:
            r = rng.uniform(0.1, radius)
            theta = rng.uniform(0.2, np.pi - 0.2)
            roots += [r * np.exp(1j * theta), r * np.exp(-1j * theta)]
        else:
            roots.append(rng.uniform(-radius, radius))
    return poly_from_roots(roots)


def planted_pair(
    rng: np.random.Generator, p: int, q: int, d: int
) -> Tuple[Polynomial, Polynomial, Tuple[float, ...]]:
    """(a, c) of degrees p, q sharing exactly d zeros drawn from ROOT_POOL."""
    picks = rng.choice(ROOT_POOL, size=p + q - d, replace=False)
    shared = tuple(picks[:d])
    a_roots = list(shared) + list(picks[d:p])
    c_roots = list(shared) + list(picks[p:])
    return poly_from_roots(a_roots), poly_from_roots(c_roots), shared


def separated_pair(
    rng: np.random.Generator, p: int, q: int, d: int
) -> Tuple[Polynomial, Polynomial, Tuple[float, ...]]:
    """(a, c) with p, q <= 4 sharing exactly d <= 2 zeros; other zeros of a and c stay 0.3 apart."""
    shared = tuple(rng.choice(SHARED_POOL, size=d, replace=False))
    a_roots = list(shared) + list(rng.choice(A_ONLY_POOL, size=p - d, replace=False))
    c_roots = list(shared) + list(rng.choice(C_ONLY_POOL, size=q - d, replace=False))
    return poly_from_roots(a_roots), poly_from_roots(c_roots), shared


@pytest.fixture(autouse=True)
def _restore_package_logger():
    logger = logging.getLogger("armaident")
    level, handlers = logger.level, list(logger.handlers)
    yield
    logger.setLevel(level)
    logger.handlers[:] = handlers


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def arma11():
    return ArmaModel.from_coefficients([0.5], [0.3])


@pytest.fixture
def arma11_closed_form():
    return np.array([
        [1 / (1 - 0.25), -1 / (1 - 0.15)],
        [-1 / (1 - 0.15), 1 / (1 - 0.09)],
    ])


@pytest.fixture
def planted22():
    """a = (1 - 0.5z)(1 - 0.3z), c = (1 - 0.5z)(1 + 0.2z)."""
    return [1.0, -0.8, 0.15], [1.0, -0.3, -0.1]


@pytest.fixture
def write_model(tmp_path):
    def _write(ar, ma, sigma2=1.0, name="model.json", **extra):
        path = tmp_path / name
        body = {"ar": list(ar), "ma": list(ma), "sigma2": sigma2}
        body.update(extra)
        path.write_text(json.dumps(body))
        return str(path)

    return _write
