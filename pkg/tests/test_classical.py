import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlspecial.classical import (
    HypArgs,
    beta_fn,
    chaudhry_1f1,
    chaudhry_2f1,
    chaudhry_beta_p,
    chaudhry_gamma_p,
    gamma_fn,
    gauss_2f1,
    kummer_1f1,
    pochhammer,
)
from mlspecial.errors import DomainError, PoleError
from oracles import chaudhry_beta_mp, chaudhry_gamma_mp, hyp1f1_mp, hyp2f1_mp


def test_gamma_and_beta_basics():
    assert gamma_fn(5) == 24
    assert gamma_fn(-0.5) == pytest.approx(-2 * math.sqrt(math.pi))
    assert gamma_fn(400) == math.inf
    with pytest.raises(PoleError):
        gamma_fn(-2)
    assert beta_fn(2, 3) == pytest.approx(1 / 12, rel=1e-15)
    with pytest.raises(DomainError):
        beta_fn(0, 1)


def test_pochhammer():
    assert pochhammer(3, 0) == 1
    assert pochhammer(0.5, 3) == pytest.approx(0.5 * 1.5 * 2.5)
    with pytest.raises(DomainError):
        pochhammer(1, -1)


def test_hyp_args_ordering():
    with pytest.raises(DomainError):
        HypArgs(1, 2, 2)


@pytest.mark.parametrize("z", [-3.0, -0.9, -0.2, 0.3, 0.75, 0.95])
@pytest.mark.parametrize("abc", [(0.5, 1, 2.5), (1.3, 0.7, 2.2), (-0.4, 1.5, 3)])
def test_gauss_against_mpmath(abc, z):
    ref = hyp2f1_mp(*abc, z)
    assert gauss_2f1(abc, z).value == pytest.approx(ref, rel=1e-12)
    assert gauss_2f1(abc, z, method="integral").value == pytest.approx(ref, rel=1e-11)


def test_gauss_method_domains():
    with pytest.raises(DomainError):
        gauss_2f1((1, 1, 2), 1.2, method="series")
    with pytest.raises(DomainError):
        gauss_2f1((1, 1, 2), 1.0, method="integral")
    with pytest.raises(ValueError):
        gauss_2f1((1, 1, 2), 0.1, method="bogus")


@given(b=st.floats(0.1, 4), gap=st.floats(0.1, 4), z=st.floats(-30, 30))
@settings(max_examples=60, deadline=None)
def test_kummer_against_mpmath(b, gap, z):
    c = b + gap
    assert kummer_1f1(b, c, z).value == pytest.approx(hyp1f1_mp(b, c, z), rel=1e-11)


@pytest.mark.parametrize("x,p", [(0.5, 0.1), (1.3, 1), (3, 5), (2.5, 0)])
def test_chaudhry_gamma_bessel_closed_form(x, p):
    assert chaudhry_gamma_p(x, p).value == pytest.approx(chaudhry_gamma_mp(x, p), rel=1e-11)


@pytest.mark.parametrize("x,y,p", [(1.3, 2.1, 0.1), (0.5, 0.5, 1), (2, 3, 5), (-0.5, 0.4, 0.3)])
def test_chaudhry_beta(x, y, p):
    assert chaudhry_beta_p(x, y, p).value == pytest.approx(chaudhry_beta_mp(x, y, p), rel=1e-11)


def test_chaudhry_reduces_at_p_zero():
    assert chaudhry_beta_p(2, 3, 0).value == pytest.approx(1 / 12, rel=1e-13)
    assert chaudhry_2f1(0.5, 1, 2.5, 0.4, 0).value == pytest.approx(hyp2f1_mp(0.5, 1, 2.5, 0.4), rel=1e-12)
    assert chaudhry_1f1(1.2, 3.4, -2, 0).value == pytest.approx(hyp1f1_mp(1.2, 3.4, -2), rel=1e-12)


def test_chaudhry_domain():
    with pytest.raises(DomainError):
        chaudhry_gamma_p(1, -1)
    with pytest.raises(DomainError):
        chaudhry_beta_p(0, 1, 0)
    with pytest.raises(DomainError):
        chaudhry_2f1(1, 1, 2, 1.0, 0.5)
