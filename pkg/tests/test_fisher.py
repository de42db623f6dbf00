# tests/test_fisher.py

import logging

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from armaident.errors import InputError, NotStable, SingularSystem
from armaident.fisher import (
    ArmaModel,
    Verdict,
    cramer_rao_bound,
    fisher_factorization,
    fisher_information,
    fisher_solution,
    identifiability_report,
    render_report,
)
from armaident.stein import is_positive_definite
from armaident.structmat import numerical_rank

from conftest import planted_pair, random_stable, separated_pair


# ---------- model ----------


def test_model_from_coefficients(arma11):
    assert arma11.p == 1 and arma11.q == 1 and arma11.dim == 2
    assert_allclose(arma11.theta, [0.5, 0.3])
    assert arma11.sigma2 == 1.0


def test_model_rejects_bad_variance():
    with pytest.raises(InputError):
        ArmaModel.from_coefficients([0.5], [0.3], sigma2=0.0)
    with pytest.raises(InputError):
        ArmaModel.from_coefficients([0.5], [0.3], sigma2=float("nan"))


@pytest.mark.parametrize("ar, ma", [([-2.0], [0.3]), ([0.5], [1.0]), ([-1.0, 0.25], [0.0, -1.2])])
def test_model_rejects_unstable(ar, ma):
    with pytest.raises(NotStable):
        ArmaModel.from_coefficients(ar, ma)


# ---------- Fisher matrix ----------


def test_fisher_arma11(arma11, arma11_closed_form):
    assert_allclose(fisher_information(arma11), arma11_closed_form, rtol=1e-12)


def test_fisher_pure_ar_and_ma():
    assert_allclose(fisher_information(ArmaModel.from_coefficients([0.5], [])), [[4 / 3]], rtol=1e-13)
    assert_allclose(fisher_information(ArmaModel.from_coefficients([], [0.3])), [[1 / 0.91]], rtol=1e-13)


def test_fisher_common_root_has_rank_one():
    info = fisher_information(ArmaModel.from_coefficients([0.5], [0.5]))
    assert_allclose(info, [[4 / 3, -4 / 3], [-4 / 3, 4 / 3]], rtol=1e-12)
    assert numerical_rank(info)[0] == 1


def test_fisher_needs_parameters():
    with pytest.raises(InputError):
        fisher_information(ArmaModel.from_coefficients([], []))


def test_fisher_independent_of_sigma2():
    base = fisher_information(ArmaModel.from_coefficients([-0.4, 0.1], [0.3], sigma2=1.0))
    for sigma2 in (0.5, 4.0):
        other = fisher_information(ArmaModel.from_coefficients([-0.4, 0.1], [0.3], sigma2=sigma2))
        assert_array_equal(other, base)


def test_fisher_is_symmetric_psd():
    model = ArmaModel.from_coefficients([-0.9, 0.2], [0.4, 0.1])
    info = fisher_information(model)
    assert_allclose(info, info.T)
    assert np.min(np.linalg.eigvalsh(info)) > 0


def test_fisher_solution_with_oracle(arma11):
    sol = fisher_solution(arma11, oracle=True)
    assert sol.oracle_gap < 1e-10


@pytest.mark.parametrize("p, q", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_rank_deficiency_counts_common_roots(rng, p, q):
    for d in range(min(p, q) + 1):
        a, c, shared = planted_pair(rng, p, q, d)
        info = fisher_information(ArmaModel(a=a, c=c))
        rank, _ = numerical_rank(info)
        assert p + q - rank == d


def test_rank_counts_planted_common_factors_up_to_degree_four(rng):
    for _ in range(100):
        d = int(rng.integers(1, 3))
        p, q = int(rng.integers(d, 5)), int(rng.integers(d, 5))
        a, c, _ = separated_pair(rng, p, q, d)
        rank, _ = numerical_rank(fisher_information(ArmaModel(a=a, c=c)))
        assert rank == p + q - d, (p, q, d)


def test_rank_is_full_without_common_factors(rng):
    checked = 0
    while checked < 100:
        p, q = int(rng.integers(0, 5)), int(rng.integers(0, 5))
        if p + q == 0:
            continue
        a, c, _ = separated_pair(rng, p, q, 0)
        rank, _ = numerical_rank(fisher_information(ArmaModel(a=a, c=c)))
        assert rank == p + q, (p, q)
        checked += 1


# ---------- factorization ----------


def test_factorization_arma11(arma11, arma11_closed_form):
    fact = fisher_factorization(arma11)
    assert_allclose(fact.R, [[1, 0.3], [-1, -0.5]])
    assert_allclose(fact.R @ fact.P @ fact.R.T, arma11_closed_form, rtol=1e-12)
    assert fact.residual <= 1e-9
    assert is_positive_definite(fact.P)


def test_factorization_common_root():
    fact = fisher_factorization(ArmaModel.from_coefficients([0.5], [0.5]))
    assert numerical_rank(fact.R)[0] == 1
    assert is_positive_definite(fact.P)
    assert fact.residual <= 1e-9


def test_factorization_pure_ar():
    model = ArmaModel.from_coefficients([0.5], [])
    fact = fisher_factorization(model)
    assert_allclose(fact.R, [[1]])
    assert_allclose(fact.P, fisher_information(model), rtol=1e-13)


def test_factorization_random_equal_degrees(rng):
    for _ in range(200):
        n = int(rng.integers(1, 6))
        model = ArmaModel(a=random_stable(rng, n), c=random_stable(rng, n))
        assert fisher_factorization(model).residual <= 1e-9


def test_factorization_random_unequal_degrees(rng):
    checked = 0
    while checked < 200:
        p, q = int(rng.integers(0, 6)), int(rng.integers(0, 6))
        if p == q:
            continue
        model = ArmaModel(a=random_stable(rng, p), c=random_stable(rng, q))
        assert fisher_factorization(model).residual <= 1e-9, (p, q)
        checked += 1


# ---------- Cramer-Rao ----------


def test_cramer_rao_bound(arma11, arma11_closed_form):
    bound = cramer_rao_bound(arma11, 100)
    assert_allclose(bound @ arma11_closed_form, np.eye(2) / 100, atol=1e-10)


def test_cramer_rao_needs_identifiable_model():
    with pytest.raises(SingularSystem):
        cramer_rao_bound(ArmaModel.from_coefficients([0.5], [0.5]), 100)
    with pytest.raises(InputError):
        cramer_rao_bound(ArmaModel.from_coefficients([0.5], [0.3]), 0)


# ---------- identifiability ----------


def test_report_identifiable(arma11):
    report = identifiability_report(arma11)
    assert report.verdict is Verdict.IDENTIFIABLE
    assert report.rank == 2 and report.dim == 2
    assert report.resultant_det == pytest.approx(-0.2, abs=1e-15)
    assert report.resultant_det_from_roots == pytest.approx(-0.2, abs=1e-14)
    assert not report.resultant_singular
    assert report.common_roots == []
    assert report.bezout_rank == 1
    assert len(report.kernel_basis) == 0
    assert report.singular_value_gap is None
    assert report.consistent and not report.borderline
    assert set(report.detectors) == {"fisher_rank", "resultant", "common_roots", "bezout_rank"}


def test_report_planted_common_factor(planted22):
    a, c = planted22
    model = ArmaModel.from_coefficients(a[1:], c[1:])
    report = identifiability_report(model)
    assert report.verdict is Verdict.SINGULAR
    assert report.rank == 3
    assert len(report.common_roots) == 1
    assert abs(report.common_roots[0][0] - 0.5) < 1e-10
    assert report.bezout_rank == 1
    assert_allclose(report.kernel_basis.vectors[0], [0.5, 1.0], atol=1e-10)
    assert report.singular_value_gap > 1e6
    assert report.consistent


def test_report_identical_polynomials():
    report = identifiability_report(ArmaModel.from_coefficients([0.5], [0.5]))
    assert report.verdict is Verdict.SINGULAR
    assert report.rank == 1
    assert all(v is Verdict.SINGULAR for v in report.detectors.values())


def test_report_unequal_degrees_skips_bezout():
    report = identifiability_report(ArmaModel.from_coefficients([-0.4, 0.1], [0.3]))
    assert report.bezout_rank is None
    assert report.kernel_basis is None
    assert "bezout_rank" not in report.detectors
    assert report.verdict is Verdict.IDENTIFIABLE


def test_report_flags_disagreement(arma11, caplog):
    # a coarse rank tolerance drops the small Fisher singular value but not the Bezout one
    with caplog.at_level(logging.WARNING, logger="armaident.fisher.information"):
        report = identifiability_report(arma11, tol=0.05)
    assert report.detectors["fisher_rank"] is Verdict.SINGULAR
    assert report.detectors["bezout_rank"] is Verdict.IDENTIFIABLE
    assert report.verdict is Verdict.SINGULAR
    assert report.borderline and not report.consistent
    assert "detectors disagree" in caplog.text


def test_render_report(planted22):
    a, c = planted22
    report = identifiability_report(ArmaModel.from_coefficients(a[1:], c[1:]))
    text = render_report(report, 2, 2)
    assert text.startswith("== identifiability ==")
    assert "singular" in text
    for label in ("a1", "a2", "c1", "c2"):
        assert label in text
    assert "== common zeros ==" in text
    assert "== bezout kernel ==" in text


def test_render_report_identifiable(arma11):
    text = render_report(identifiability_report(arma11), 1, 1)
    assert "identifiable" in text
    assert "== common zeros ==" not in text
