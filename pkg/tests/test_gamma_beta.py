import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlspecial.errors import DomainError
from mlspecial.gamma_beta import (
    REPRESENTATIONS,
    Affine,
    BetaArgs,
    beta_mellin_quadrature,
    mellin_beta_rhs,
    ml_beta_p,
    ml_beta_p_many,
    ml_gamma_mellin,
    ml_gamma_p,
    ml_gamma_product_polar,
)
from mlspecial.mittag_leffler import MLParams
from oracles import ml_beta_mp, ml_beta_oscillatory_mp

EXP = MLParams(1, 1, 1)
ML = MLParams(0.7, 1.3, 2)


def test_argument_validation():
    with pytest.raises(DomainError):
        BetaArgs(1, 1, -0.1)
    with pytest.raises(DomainError):
        BetaArgs(0, 1, 0)
    BetaArgs(-0.5, 1, 0.2)  # p > 0 defers to the integrability screen
    with pytest.raises(DomainError):
        Affine(1, 1)


@pytest.mark.parametrize("x,y,p,abc", [(1.3, 2.1, 0.5, (1, 1.3, 2)), (2, 1, 1, (1, 1, 1)),
                                       (0.5, 0.5, 0.2, (1, 2, 1)), (0.7, 1.6, 2.0, (1, 0.8, 1.7))])
def test_beta_against_mpmath(x, y, p, abc):
    ref = ml_beta_mp(x, y, p, *abc)
    assert ml_beta_p(x, y, p, MLParams(*abc)).value == pytest.approx(ref, rel=1e-10)


def test_oscillating_kernel_is_accurate_but_flagged():
    # alpha = 2: the kernel cos(sqrt(p / (t (1 - t)))) oscillates infinitely often at the endpoints
    est = ml_beta_p(0.8, 1.2, 0.3, MLParams(2, 1, 1))
    ref = ml_beta_oscillatory_mp(0.8, 1.2, 0.3, 1, 1)
    assert est.value == pytest.approx(ref, rel=1e-7)
    assert abs(est.value - ref) <= 10 * est.err_estimate


def test_screening_uses_tail_order():
    # endpoint exponent x - 1 + r must exceed -1: r = 2 lets x = -0.5 through
    assert ml_beta_p(-0.5, 1.5, 0.3, ML).value > 0
    with pytest.raises(DomainError):
        ml_beta_p(-2.5, 1.5, 0.3, ML)
    with pytest.raises(DomainError):
        ml_gamma_p(2.0, 0.0, MLParams(1, 2, 1))
    with pytest.raises(DomainError):
        ml_gamma_p(1.0, -1.0, EXP)


@pytest.mark.parametrize("rep", REPRESENTATIONS + (Affine(-3, 0.5),))
def test_representations_agree(rep):
    ref = ml_beta_p(1.3, 2.1, 0.7, ML).value
    assert ml_beta_p(1.3, 2.1, 0.7, ML, rep).value == pytest.approx(ref, rel=1e-10)


def test_unknown_representation():
    with pytest.raises(ValueError):
        ml_beta_p(1, 1, 0, EXP, "polar")


@given(x=st.floats(0.3, 4), y=st.floats(0.3, 4), p=st.floats(0.0, 3.0))
@settings(max_examples=30, deadline=None)
def test_beta_symmetry(x, y, p):
    a = ml_beta_p(x, y, p, ML).value
    b = ml_beta_p(y, x, p, ML).value
    assert a == pytest.approx(b, rel=1e-9)


def test_beta_decreases_in_p_for_positive_kernel():
    ps = np.linspace(0, 2, 5)
    vals = [ml_beta_p(1.0, 1.0, p, EXP).value for p in ps]
    assert all(np.diff(vals) < 0)


def test_many_matches_scalar():
    xs = np.array([0.7, 1.3, 2.5])
    est = ml_beta_p_many(xs, 2.1, 0.4, ML)
    for x, v in zip(xs, est.values):
        assert v == pytest.approx(ml_beta_p(x, 2.1, 0.4, ML).value, rel=1e-10)


@pytest.mark.parametrize("s,abc", [(0.5, (1, 1, 1)), (1.2, (0.7, 1.3, 2)), (0.4, (1.5, 1, 1)),
                                   (2.0, (0.5, 1, 3))])
def test_gamma_mellin_closed_form_is_gamma_at_p_zero(s, abc):
    params = MLParams(*abc)
    assert ml_gamma_p(s, 0.0, params).value == pytest.approx(ml_gamma_mellin(s, params), rel=1e-9)


def test_gamma_mellin_domain():
    with pytest.raises(DomainError):
        ml_gamma_mellin(2.5, ML)
    with pytest.raises(DomainError):
        ml_gamma_mellin(0.0, ML)


def test_gamma_reduces_to_euler_gamma():
    for x in (0.5, 1, 2.5, 5):
        assert ml_gamma_p(x, 0, EXP).value == pytest.approx(math.gamma(x), rel=1e-10)


def test_product_form():
    gx, gy = ml_gamma_p(0.7, 0.3, ML).value, ml_gamma_p(1.2, 0.3, ML).value
    assert ml_gamma_product_polar(0.7, 1.2, 0.3, ML).value == pytest.approx(gx * gy, rel=1e-6)


def test_mellin_beta():
    est = beta_mellin_quadrature(2, 3, 0.5, ML)
    assert est.value == pytest.approx(mellin_beta_rhs(2, 3, 0.5, ML), rel=1e-6)
