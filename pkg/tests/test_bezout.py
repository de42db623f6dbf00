# tests/test_bezout.py

import numpy as np
import pytest
from numpy.testing import assert_allclose

from armaident.bezout import (
    bezout_common_zero_factor,
    bezout_decompose_once,
    bezout_expansion,
    bezout_matrix,
    common_zero_reconstruction,
    kernel_basis,
    sylvester_bezout_relation,
)
from armaident.errors import BadFactorization, DegreeMismatch, NotAFactor
from armaident.poly import make_polynomial, roots_of_reciprocal
from armaident.structmat import numerical_rank, u_vector

from conftest import planted_pair, poly_from_roots, random_stable


PLANTED_B = [[-0.5, 0.25], [0.25, -0.125]]


# ---------- bezout_matrix ----------


def test_bezout_matrix_examples(planted22):
    a, b = map(make_polynomial, planted22)
    assert_allclose(bezout_matrix(make_polynomial([1, 0.5]), make_polynomial([1, 0.3])).entries, [[0.2]])
    assert_allclose(bezout_matrix(a, a).entries, np.zeros((2, 2)))
    assert_allclose(bezout_matrix(a, b).entries, PLANTED_B, atol=1e-15)


def test_bezout_matrix_needs_equal_degrees():
    with pytest.raises(DegreeMismatch, match="equal degrees required"):
        bezout_matrix(make_polynomial([1, 0.5]), make_polynomial([1, 0.5, 0.1]))
    with pytest.raises(DegreeMismatch):
        bezout_matrix(make_polynomial([1]), make_polynomial([1]))


@pytest.mark.parametrize("n", range(1, 7))
def test_defining_identity(rng, n):
    a, b = random_stable(rng, n), random_stable(rng, n)
    B = bezout_matrix(a, b).entries
    for _ in range(50):
        z, w = rng.normal(size=2) + 1j * rng.normal(size=2)
        lhs = a(z) * b(w) - a(w) * b(z)
        rhs = (z - w) * (u_vector(n, z) @ B @ u_vector(n, w))
        scale = 1.0 + abs(a(z) * b(w)) + abs(a(w) * b(z))
        assert abs(lhs - rhs) <= 1e-10 * scale


def test_symmetry_and_antisymmetry(rng):
    for n in range(1, 6):
        a, b = random_stable(rng, n), random_stable(rng, n)
        B = bezout_matrix(a, b).entries
        assert_allclose(B, B.T, atol=1e-14)
        assert_allclose(bezout_matrix(b, a).entries, -B, atol=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_rank_drops_by_gcd_degree(rng, n):
    for d in range(n + 1):
        a, b, _ = planted_pair(rng, n, n, d)
        rank, _ = numerical_rank(bezout_matrix(a, b).entries)
        assert rank == n - d


# ---------- decompositions ----------


def test_decompose_once_planted(planted22):
    a, b = map(make_polynomial, planted22)
    inner, rebuilt = bezout_decompose_once(a, b, 0.5, 0.5)
    assert_allclose(inner, [[-0.5]], atol=1e-15)
    assert_allclose(rebuilt, PLANTED_B, atol=1e-14)


def test_decompose_once_degree_one():
    inner, rebuilt = bezout_decompose_once(make_polynomial([1, 0.5]), make_polynomial([1, 0.3]), -0.5, -0.3)
    assert inner.shape == (0, 0)
    assert_allclose(rebuilt, [[0.2]], atol=1e-15)


def test_decompose_once_identical_polynomials():
    a = make_polynomial([1, -0.8, 0.15])
    _, rebuilt = bezout_decompose_once(a, a, 0.3, 0.3)
    assert_allclose(rebuilt, np.zeros((2, 2)), atol=1e-15)


def test_decompose_once_reconstructs(rng):
    for n in range(2, 6):
        a, b = random_stable(rng, n), random_stable(rng, n)
        alpha = roots_of_reciprocal(a).expanded()[0]
        beta = roots_of_reciprocal(b).expanded()[0]
        _, rebuilt = bezout_decompose_once(a, b, alpha, beta)
        assert_allclose(rebuilt, bezout_matrix(a, b).entries, atol=1e-10)


def test_decompose_once_rejects_non_factor(planted22):
    a, b = map(make_polynomial, planted22)
    with pytest.raises(NotAFactor):
        bezout_decompose_once(a, b, 0.9, 0.5)


def test_expansion_planted(planted22):
    a, b = map(make_polynomial, planted22)
    out = bezout_expansion(a, b, [0.5, 0.3], [0.5, -0.2])
    assert_allclose(out, PLANTED_B, atol=1e-14)


def test_expansion_degree_one_and_identical():
    out = bezout_expansion(make_polynomial([1, 0.5]), make_polynomial([1, 0.3]), [-0.5], [-0.3])
    assert_allclose(out, [[0.2]], atol=1e-15)
    a = poly_from_roots([0.4, -0.2, 0.65])
    assert_allclose(bezout_expansion(a, a, [0.4, -0.2, 0.65], [0.4, -0.2, 0.65]), np.zeros((3, 3)), atol=1e-15)


def test_expansion_matches_matrix(rng):
    for n in range(1, 6):
        a, b = random_stable(rng, n), random_stable(rng, n)
        alphas = roots_of_reciprocal(a).expanded()
        betas = roots_of_reciprocal(b).expanded()
        out = bezout_expansion(a, b, list(alphas), list(betas))
        assert_allclose(out, bezout_matrix(a, b).entries, atol=1e-10)


def test_expansion_rejects_wrong_factors(planted22):
    a, b = map(make_polynomial, planted22)
    with pytest.raises(BadFactorization):
        bezout_expansion(a, b, [0.1, 0.2], [0.5, -0.2])
    with pytest.raises(BadFactorization):
        bezout_expansion(a, b, [0.5], [0.5, -0.2])


# ---------- common zeros and the kernel ----------


def test_common_zero_factor_planted(planted22):
    a, b = map(make_polynomial, planted22)
    inner = bezout_common_zero_factor(a, b, 0.5)
    assert_allclose(inner, [[-0.5]], atol=1e-15)
    assert_allclose(common_zero_reconstruction(inner, 0.5, 2), PLANTED_B, atol=1e-14)


def test_common_zero_factor_degree_one():
    a = make_polynomial([1, -0.5])
    inner = bezout_common_zero_factor(a, a, 0.5)
    assert inner.shape == (0, 0)
    assert_allclose(common_zero_reconstruction(inner, 0.5, 1), [[0.0]])


def test_common_zero_factor_repeated():
    a = poly_from_roots([0.5, 0.5, 0.3])
    b = poly_from_roots([0.5, 0.5, -0.2])
    inner = bezout_common_zero_factor(a, b, 0.5, times=2)
    assert_allclose(inner, [[-0.5]], atol=1e-14)
    rebuilt = common_zero_reconstruction(inner, 0.5, 3, times=2)
    assert_allclose(rebuilt, bezout_matrix(a, b).entries, atol=1e-10)

    square = poly_from_roots([0.5, 0.5])
    assert bezout_common_zero_factor(square, square, 0.5, times=2).shape == (0, 0)


def test_common_zero_factor_rejects_non_common_zero(planted22):
    a, b = map(make_polynomial, planted22)
    with pytest.raises(NotAFactor):
        bezout_common_zero_factor(a, b, 0.3)


def test_kernel_planted(planted22):
    a, b = map(make_polynomial, planted22)
    kb = kernel_basis(a, b)
    assert len(kb) == 1
    assert_allclose(kb.vectors[0], [0.5, 1.0], atol=1e-10)
    assert kb.residuals[0] < 1e-12
    assert abs(kb.common_roots[0][0] - 0.5) < 1e-10


def test_kernel_empty_without_common_zeros():
    kb = kernel_basis(make_polynomial([1, -0.5]), make_polynomial([1, 0.3]))
    assert len(kb) == 0
    assert kb.as_matrix(1).shape == (1, 0)


def test_kernel_full_when_identical():
    a = make_polynomial([1, -0.8, 0.15])
    kb = kernel_basis(a, a)
    assert len(kb) == 2
    assert numerical_rank(kb.as_matrix(2))[0] == 2


def test_kernel_double_common_zero():
    a = poly_from_roots([0.4, 0.4, -0.2])
    b = poly_from_roots([0.4, 0.4, 0.65])
    kb = kernel_basis(a, b)
    assert kb.common_roots[0][1] == 2
    V = kb.as_matrix(3)
    assert V.shape == (3, 2)
    assert numerical_rank(V)[0] == 2
    B = bezout_matrix(a, b).entries
    assert np.linalg.norm(B @ V) <= 1e-8 * np.linalg.norm(B) * np.linalg.norm(V)


def test_kernel_triple_common_zero():
    a = poly_from_roots([0.5, 0.5, 0.5, -0.4])
    b = poly_from_roots([0.5, 0.5, 0.5, 0.3])
    kb = kernel_basis(a, b)
    assert kb.common_roots[0][1] == 3
    V = kb.as_matrix(4)
    assert V.shape == (4, 3)
    assert numerical_rank(V)[0] == 3
    B = bezout_matrix(a, b).entries
    assert np.linalg.norm(B @ V) <= 1e-8 * np.linalg.norm(B) * np.linalg.norm(V)

    c = poly_from_roots([0.5, 0.5, 0.5])
    assert len(kernel_basis(c, c)) == 3


def test_kernel_complex_pair():
    gamma = 0.5 * np.exp(0.8j)
    a = poly_from_roots([gamma, np.conj(gamma), 0.15])
    b = poly_from_roots([gamma, np.conj(gamma), -0.45])
    kb = kernel_basis(a, b)
    assert len(kb.common_roots) == 1
    assert kb.common_roots[0][0].imag > 0
    V = kb.as_matrix(3)
    assert V.shape == (3, 2)
    assert not np.iscomplexobj(V)
    assert numerical_rank(V)[0] == 2
    B = bezout_matrix(a, b).entries
    assert np.linalg.norm(B @ V) <= 1e-8 * np.linalg.norm(B) * np.linalg.norm(V)


# ---------- link with the resultant ----------


@pytest.mark.parametrize("n", range(1, 6))
def test_sylvester_bezout_relation(rng, n):
    a, c = random_stable(rng, n), random_stable(rng, n)
    left, right = sylvester_bezout_relation(c, a)
    assert_allclose(left, right, atol=1e-12)


def test_sylvester_bezout_relation_example():
    left, right = sylvester_bezout_relation(make_polynomial([1, 0.3]), make_polynomial([1, 0.5]))
    assert_allclose(left, [[1, 0.3], [0, -0.2]], atol=1e-15)
    assert_allclose(right, left, atol=1e-15)
