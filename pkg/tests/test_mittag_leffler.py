import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlspecial.errors import DomainError
from mlspecial.mittag_leffler import (
    X_CROSS,
    MLParams,
    ml3,
    ml3_asymptotic,
    ml3_negative,
    ml3_series,
    tail_order,
    z_cross,
)
from oracles import ml3_mp

KERNELS = [(1, 1, 1), (0.7, 1.3, 2), (1.5, 1, 1), (0.5, 0.5, 1.5), (1, 2, 1),
           (1.2, 0.4, 0.3), (1.9, 2.5, 0.7), (0.3, 0.8, 0.6), (2, 1, 1)]


def test_params_validation():
    with pytest.raises(DomainError):
        MLParams(0, 1, 1)
    with pytest.raises(DomainError):
        MLParams(2.5, 1, 1)
    with pytest.raises(DomainError):
        MLParams(1, -1, 1)
    with pytest.raises(DomainError):
        MLParams(1, 1, 0)
    assert str(MLParams(0.7, 1.3, 2)) == "(0.7,1.3,2)"
    assert MLParams(1, 1, 1).astuple() == (1.0, 1.0, 1.0)


def test_crossover():
    assert z_cross(1.0) == X_CROSS
    assert z_cross(0.5) == pytest.approx(math.sqrt(X_CROSS))


@pytest.mark.parametrize("z", [-5, -2, 0, 1, 3, 5])
def test_exponential_reduction(z):
    assert ml3(MLParams(1, 1, 1), z).value == pytest.approx(math.exp(z), rel=1e-13)


@pytest.mark.parametrize("z", [0.5, 1, 2, 7])
def test_cosine_reduction(z):
    assert ml3(MLParams(2, 1, 1), -z * z).value == pytest.approx(math.cos(z), abs=1e-14)


def test_known_special_cases():
    # E_{1,2}(-u) = (1 - exp(-u)) / u and E_{1/2,1}(-u) = exp(u**2) erfc(u)
    from scipy.special import erfcx
    u = np.array([0.1, 1.0, 5.0, 30.0, 200.0])
    np.testing.assert_allclose(ml3_negative(MLParams(1, 2, 1), u), -np.expm1(-u) / u, rtol=1e-13)
    np.testing.assert_allclose(ml3_negative(MLParams(0.5, 1, 1), u), erfcx(u), rtol=1e-12)


@pytest.mark.parametrize("abc", KERNELS, ids=str)
def test_negative_axis_against_high_precision(abc):
    params = MLParams(*abc)
    zc = z_cross(params.alpha)
    us = np.concatenate([np.logspace(-3, math.log10(0.99 * zc), 5), [zc * 1.01, zc * 1.8]])
    vals = ml3_negative(params, us)
    ref = np.array([ml3_mp(*abc, -u) for u in us])
    scale = np.maximum(np.abs(ref), 1e-12)
    assert np.max(np.abs(vals - ref) / scale) < 1e-10


@pytest.mark.parametrize("abc", [(0.7, 1.3, 2), (1.5, 1, 1), (1, 1.3, 2.5)], ids=str)
@pytest.mark.parametrize("z", [0.3, 4.0, 25.0])
def test_positive_axis_series(abc, z):
    est = ml3(MLParams(*abc), z)
    assert est.converged
    assert est.value == pytest.approx(ml3_mp(*abc, z), rel=1e-12)


def test_series_and_asymptotic_overlap():
    params = MLParams(0.7, 1.3, 2)
    u = 1.2 * z_cross(0.7)
    series = ml3_series(params, -u, extended=True)
    asym = ml3_asymptotic(params, u)
    assert asym.value == pytest.approx(series.value, rel=1e-9)


def test_asymptotic_domain():
    with pytest.raises(DomainError):
        ml3_asymptotic(MLParams(2, 1, 1), 1e4)
    with pytest.raises(DomainError):
        ml3_asymptotic(MLParams(0.7, 1.3, 2), 1.0)


def test_endpoints_of_the_negative_axis():
    params = MLParams(0.7, 1.3, 2)
    assert ml3_negative(params, 0.0)[()] == pytest.approx(1 / math.gamma(1.3))
    assert ml3_negative(params, math.inf)[()] == 0.0


def test_algebraic_tail_matches_tail_order():
    # E(-u) ~ u**-gamma * Gamma(...) so u**r E(-u) settles to a constant
    params = MLParams(0.7, 1.3, 2)
    r = tail_order(params)
    u = np.array([1e6, 1e7])
    w = u**r * ml3_negative(params, u)
    assert w[1] == pytest.approx(w[0], rel=1e-3)


def test_tail_order_values():
    assert tail_order(MLParams(1, 1, 1)) == math.inf
    assert tail_order(MLParams(0.7, 1.3, 2)) == 2.0
    # 1/Gamma(beta - alpha*gamma) vanishes for (1, 2, 1), so the next power takes over
    assert tail_order(MLParams(0.5, 1, 2)) == 3.0
    assert tail_order(MLParams(1, 2, 1)) == 1.0


@given(alpha=st.floats(0.2, 1.95), beta=st.floats(0.3, 3.0), gamma=st.floats(0.2, 3.0),
       u=st.floats(0.0, 1e4))
@settings(max_examples=60, deadline=None)
def test_kernel_is_finite_and_bounded(alpha, beta, gamma, u):
    value = ml3_negative(MLParams(alpha, beta, gamma), u)[()]
    assert math.isfinite(value)
    # |E(-u)| never exceeds the majorant sum (gamma)_n u^n / (n! |Gamma(alpha n + beta)|) at u = 0
    if u == 0:
        assert value == pytest.approx(1 / math.gamma(beta))


@given(u=st.floats(1e-3, 1e3))
@settings(max_examples=40, deadline=None)
def test_completely_monotone_kernel_decreases(u):
    params = MLParams(0.6, 0.9, 1.2)
    lo, hi = ml3_negative(params, np.array([u, 1.01 * u]))
    assert 0 < hi <= lo
