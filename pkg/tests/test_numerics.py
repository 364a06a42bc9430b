import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from mlspecial.errors import DomainError, NonConvergenceError
from mlspecial.numerics import (
    Estimate,
    QuadratureConfig,
    integrate_semi_infinite,
    integrate_unit,
    integrate_unit_many,
    sum_series,
)


def test_polynomial_is_exact():
    est = integrate_unit(lambda t: 3 * t**2)
    assert est.converged
    assert est.value == pytest.approx(1.0, rel=1e-15)


@given(mu=st.floats(-0.95, 3.0), nu=st.floats(-0.95, 3.0))
@settings(max_examples=40, deadline=None)
def test_endpoint_singularities_match_beta(mu, nu):
    cfg = QuadratureConfig(rel_tol=1e-11, abs_tol=0.0, endpoint_exponents=(mu, nu))
    est = integrate_unit(lambda t, tc: t**mu * tc**nu, cfg, complement=True)
    assert est.converged
    assert est.value == pytest.approx(special.beta(mu + 1, nu + 1), rel=1e-9)


def test_complement_is_accurate_near_one():
    # (1 - t)**-0.9 would lose digits if 1 - t were formed by subtraction
    cfg = QuadratureConfig(rel_tol=1e-12, abs_tol=0.0, endpoint_exponents=(0.0, -0.9))
    est = integrate_unit(lambda t, tc: tc**-0.9, cfg, complement=True)
    assert est.value == pytest.approx(10.0, rel=1e-11)


def test_many_components_share_nodes():
    ks = np.arange(1, 6)
    est = integrate_unit_many(lambda t: t[None, :] ** (ks[:, None] - 1.0))
    np.testing.assert_allclose(est.values, 1.0 / ks, rtol=1e-13)
    assert len(est) == 5
    assert est[2].value == pytest.approx(1 / 3)


def test_semi_infinite_gamma():
    cfg = QuadratureConfig(rel_tol=1e-12, abs_tol=0.0, endpoint_exponents=(1.5, 0.0))
    est = integrate_semi_infinite(lambda u: u**1.5 * np.exp(-u), cfg, decay=-math.inf)
    assert est.value == pytest.approx(math.gamma(2.5), rel=1e-11)


def test_semi_infinite_algebraic_decay():
    est = integrate_semi_infinite(lambda u: 1.0 / (1.0 + u) ** 3, decay=-3.0)
    assert est.value == pytest.approx(0.5, rel=1e-10)


def test_divergent_decay_rejected():
    with pytest.raises(DomainError):
        integrate_semi_infinite(lambda u: 1.0 / (1.0 + u), decay=-1.0)


def test_screen_detects_divergence():
    with pytest.raises(DomainError):
        integrate_semi_infinite(lambda u: 1.0 / (1.0 + u) ** 0.5)


def test_budget_exhaustion_is_flagged():
    cfg = QuadratureConfig(rel_tol=1e-14, max_subdivisions=2)
    est = integrate_unit(lambda t: np.sin(200 * t), cfg)
    assert not est.converged
    with pytest.raises(NonConvergenceError):
        est.require()


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_subdivisions=0)
    assert QuadratureConfig().replace(rel_tol=1e-6).rel_tol == 1e-6


def test_estimate_coerces_and_converts():
    est = Estimate(np.float64(2.0), 0, np.int64(3), np.bool_(True))
    assert type(est.value) is float and type(est.evaluations) is int
    assert float(est) == 2.0


def test_sum_series_geometric():
    est = sum_series(lambda n: 0.5**n, rel_tol=1e-16)
    assert est.converged
    assert est.value == pytest.approx(2.0, rel=1e-15)


def test_sum_series_compensation():
    # naive left-to-right summation returns 0 here
    terms = [1.0, 1e100, 1.0, -1e100, 0.0, 0.0, 0.0]
    est = sum_series(lambda n: terms[n], max_terms=len(terms))
    assert est.value == 2.0


def test_sum_series_budget():
    est = sum_series(lambda n: 1.0 / (n + 1), max_terms=50)
    assert not est.converged
    with pytest.raises(ValueError):
        sum_series(lambda n: 1.0, max_terms=0)
