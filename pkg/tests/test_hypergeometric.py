import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlspecial.errors import DomainError
from mlspecial.hypergeometric import (
    CHF_METHODS,
    GHF_METHODS,
    chf_mellin_quadrature,
    chf_mellin_rhs,
    ghf_mellin_quadrature,
    ghf_mellin_rhs,
    kummer_transform_rhs,
    ml_1f1,
    ml_1f1_many,
    ml_1f1_nth_derivative,
    ml_2f1,
    ml_2f1_at_one,
    ml_2f1_nth_derivative,
    ml_2f1_unit_many,
    pfaff_printed_reading_diagnostic,
    pfaff_transform_rhs,
    recurrence_residual,
    transform_one_minus_inv_z,
    transform_z_over_one_plus_z,
)
from mlspecial.gamma_beta import ml_beta_p
from mlspecial.classical import beta_fn
from mlspecial.mittag_leffler import MLParams
from oracles import hyp1f1_mp, hyp2f1_mp, ml_1f1_mp, ml_2f1_mp

EXP = MLParams(1, 1, 1)
ML = MLParams(0.7, 1.3, 2)


@pytest.mark.parametrize("z", [-0.5, 0.3, 0.7])
def test_classical_gauss_at_p_zero(z):
    assert ml_2f1(0.5, 1, 2.5, z, 0, EXP).value == pytest.approx(hyp2f1_mp(0.5, 1, 2.5, z), rel=1e-12)


@pytest.mark.parametrize("z", [-2, 0.5, 2, 6])
def test_classical_confluent_at_p_zero(z):
    assert ml_1f1(1.2, 3.4, z, 0, EXP).value == pytest.approx(hyp1f1_mp(1.2, 3.4, z), rel=1e-12)


@pytest.mark.parametrize("a,b,c,z,p,abc", [(0.5, 1, 2.5, 0.4, 0.5, (1, 1.3, 2)),
                                          (1.2, 0.8, 2.2, -0.8, 1.0, (1, 1, 1)),
                                          (0.7, 1.5, 3, 0.9, 0.3, (1, 2, 1))])
def test_gauss_against_mpmath(a, b, c, z, p, abc):
    ref = ml_2f1_mp(a, b, c, z, p, *abc)
    assert ml_2f1(a, b, c, z, p, MLParams(*abc)).value == pytest.approx(ref, rel=1e-10)


@pytest.mark.parametrize("b,c,z,p,abc", [(1.2, 3.4, -2, 1.0, (1, 1.3, 2)), (0.5, 1.5, 3, 0.3, (1, 1, 1))])
def test_confluent_against_mpmath(b, c, z, p, abc):
    ref = ml_1f1_mp(b, c, z, p, *abc)
    assert ml_1f1(b, c, z, p, MLParams(*abc)).value == pytest.approx(ref, rel=1e-10)


@pytest.mark.parametrize("method", [m for m in GHF_METHODS if m != "auto"])
def test_gauss_methods_agree(method):
    ref = ml_2f1(0.5, 1.3, 2, -0.6, 0.5, ML, "unit").value
    assert ml_2f1(0.5, 1.3, 2, -0.6, 0.5, ML, method).value == pytest.approx(ref, rel=1e-9)


@pytest.mark.parametrize("method", [m for m in CHF_METHODS if m != "auto"])
def test_confluent_methods_agree(method):
    ref = ml_1f1(1.2, 3.4, 1.5, 0.7, ML, "direct").value
    assert ml_1f1(1.2, 3.4, 1.5, 0.7, ML, method).value == pytest.approx(ref, rel=1e-9)


def test_domains():
    with pytest.raises(DomainError):
        ml_2f1(1, 2, 2, 0.1, 0, EXP)
    with pytest.raises(DomainError):
        ml_2f1(1, 1, 2, 1.5, 0, EXP)
    with pytest.raises(DomainError):
        ml_2f1(1, 1, 2, -1.5, 0, EXP, "series")
    with pytest.raises(DomainError):
        ml_1f1(1, 2, 0.5, -0.1, EXP)
    with pytest.raises(ValueError):
        ml_2f1(1, 1, 2, 0.1, 0, EXP, "bogus")
    with pytest.raises(DomainError):
        ml_2f1_nth_derivative(-1, 1, 1, 2, 0.1, 0, EXP)


def test_value_at_zero_is_normalized_beta():
    # F_p(a, b; c; 0) = B_p(b, c - b) / B(b, c - b)
    expect = ml_beta_p(1, 1.5, 0.5, ML).value / beta_fn(1, 1.5)
    assert ml_2f1(0.5, 1, 2.5, 0.0, 0.5, ML).value == pytest.approx(expect, rel=1e-10)
    assert ml_1f1(1, 2.5, 0.0, 0.5, ML).value == pytest.approx(expect, rel=1e-10)


def test_shared_node_evaluations_match_pointwise():
    zs = np.array([-0.3, 0.2, 0.6])
    many = ml_2f1_unit_many(0.5, 1, 2.5, zs, 0.4, ML)
    for z, v in zip(zs, many):
        assert v == pytest.approx(ml_2f1(0.5, 1, 2.5, z, 0.4, ML, "unit").value, rel=1e-9)
    many = ml_1f1_many(1, 2.5, zs, 0.4, ML)
    for z, v in zip(zs, many):
        assert v == pytest.approx(ml_1f1(1, 2.5, z, 0.4, ML, "direct").value, rel=1e-9)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_derivatives_against_finite_differences(n):
    h = 1e-2
    z = 0.2
    zs = z + h * np.arange(-2, 3)
    f = ml_2f1_unit_many(0.5, 1, 2.5, zs, 0.3, ML)
    fd = {1: (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h),
          2: (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h),
          3: (-f[0] + 2 * f[1] - 2 * f[3] + f[4]) / (2 * h**3)}[n]
    exact = ml_2f1_nth_derivative(n, 0.5, 1, 2.5, z, 0.3, ML).value
    assert exact == pytest.approx(fd, rel=1e-3 if n == 3 else 1e-6)
    g = ml_1f1_many(1, 2.5, zs, 0.3, ML)
    fd1 = (g[0] - 8 * g[1] + 8 * g[3] - g[4]) / (12 * h)
    assert ml_1f1_nth_derivative(1, 1, 2.5, z, 0.3, ML).value == pytest.approx(fd1, rel=1e-6)


@given(z=st.floats(-3.0, 0.9), p=st.floats(0.0, 2.0))
@settings(max_examples=15, deadline=None)
def test_pfaff_transform(z, p):
    lhs = ml_2f1(0.5, 1.3, 2, z, p, ML).value
    assert pfaff_transform_rhs(0.5, 1.3, 2, z, p, ML).value == pytest.approx(lhs, rel=1e-8)


def test_printed_pfaff_reading_fails_classically():
    diag = pfaff_printed_reading_diagnostic(0.5, 1, 2.5, -1)
    assert diag.rel_diff_c < 1e-13
    assert diag.rel_diff_b > 0.1


@given(z=st.floats(0.1, 5.0))
@settings(max_examples=10, deadline=None)
def test_remark_transforms(z):
    lhs = ml_2f1(0.5, 1, 2.5, 1 - 1 / z, 0.3, ML).value
    assert transform_one_minus_inv_z(0.5, 1, 2.5, z, 0.3, ML).value == pytest.approx(lhs, rel=1e-8)
    lhs = ml_2f1(0.5, 1, 2.5, z / (1 + z), 0.3, ML).value
    assert transform_z_over_one_plus_z(0.5, 1, 2.5, z, 0.3, ML).value == pytest.approx(lhs, rel=1e-8)


def test_remark_domains():
    with pytest.raises(DomainError):
        transform_one_minus_inv_z(0.5, 1, 2.5, -1, 0, EXP)
    with pytest.raises(DomainError):
        transform_z_over_one_plus_z(0.5, 1, 2.5, -1, 0, EXP)


@given(z=st.floats(-5.0, 5.0), p=st.floats(0.0, 2.0))
@settings(max_examples=15, deadline=None)
def test_kummer_transform(z, p):
    lhs = ml_1f1(1.2, 3.1, z, p, ML).value
    assert kummer_transform_rhs(1.2, 3.1, z, p, ML).value == pytest.approx(lhs, rel=1e-8)


@pytest.mark.parametrize("z,p", [(0.3, 0), (-0.4, 0.5), (0.6, 0.7)])
def test_recurrence(z, p):
    report = recurrence_residual(0.5, 1, 2.5, z, p, ML)
    assert report.passed, report


def test_value_at_one():
    est = ml_2f1_at_one(0.5, 1, 3, 0.5, ML)
    assert est.value == pytest.approx(ml_2f1(0.5, 1, 3, 1.0, 0.5, ML, "unit").value, rel=1e-9)
    # Gauss summation at p = 0
    expect = math.gamma(3) * math.gamma(1.5) / (math.gamma(2.5) * math.gamma(2))
    assert ml_2f1_at_one(0.5, 1, 3, 0, EXP).value == pytest.approx(expect, rel=1e-12)
    # c - a - b < 0 converges only thanks to the kernel decay
    assert math.isfinite(ml_2f1_at_one(2, 1, 2.5, 0.5, ML).value)
    with pytest.raises(DomainError):
        ml_2f1_at_one(2, 1, 2.5, 0, EXP)


@pytest.mark.parametrize("s", [0.5, 1.5])
def test_mellin_transforms(s):
    rhs = ghf_mellin_rhs(0.5, 1, 2.5, 0.3, s, ML)
    assert ghf_mellin_quadrature(0.5, 1, 2.5, 0.3, s, ML).value == pytest.approx(rhs, rel=1e-6)
    rhs = chf_mellin_rhs(1, 2.5, -1, s, ML)
    assert chf_mellin_quadrature(1, 2.5, -1, s, ML).value == pytest.approx(rhs, rel=1e-6)
