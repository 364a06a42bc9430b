"""Mittag-Leffler generalized Gauss (F_p) and confluent (Phi_p) hypergeometric functions.

    F_p(a, b; c; z) = sum_n (a)_n B_p(b+n, c-b) / B(b, c-b) z**n / n!
    Phi_p(b; c; z)  = sum_n       B_p(b+n, c-b) / B(b, c-b) z**n / n!

Both have Euler-type integral forms obtained by summing the series under the
beta integral; the transformation formulas below are evaluated through those.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import special

from .classical import beta_fn, gauss_2f1, kummer_1f1, pochhammer
from .errors import DomainError
from .gamma_beta import (
    _endpoint_exponents,
    mellin_in_p,
    ml_beta_p,
    ml_beta_p_many,
    ml_gamma_mellin,
)
from .mittag_leffler import MLParams, ml3_negative, tail_order
from .numerics import Estimate, QuadratureConfig, integrate_semi_infinite, integrate_unit, sum_series
from .reports import CheckReport, EvalPoint, IdentityId, compare

__all__ = [
    "GHF_METHODS",
    "CHF_METHODS",
    "MLHypPoint",
    "PfaffDiagnostic",
    "chf_mellin_quadrature",
    "chf_mellin_rhs",
    "ghf_mellin_quadrature",
    "ghf_mellin_rhs",
    "kummer_transform_rhs",
    "ml_1f1",
    "ml_1f1_many",
    "ml_1f1_nth_derivative",
    "ml_2f1",
    "ml_2f1_at_one",
    "ml_2f1_nth_derivative",
    "ml_2f1_unit_many",
    "pfaff_printed_reading_diagnostic",
    "pfaff_transform_rhs",
    "recurrence_residual",
    "transform_one_minus_inv_z",
    "transform_z_over_one_plus_z",
]

GHF_METHODS = ("auto", "series", "unit", "semi-infinite", "trig", "tanh")
CHF_METHODS = ("auto", "series", "direct", "reflected")
GHF_SERIES_RADIUS = 0.7
CHF_SERIES_RADIUS = 2.0
COEFF_TOL_FLOOR = 1e-13
_BLOCK = 32


@dataclass(frozen=True)
class MLHypPoint:
    """Arguments of ``F_p(a, b; c; z)``; requires ``c > b > 0`` and ``p >= 0``."""

    a: float
    b: float
    c: float
    z: float
    p: float
    params: MLParams

    def __post_init__(self):
        _check_bc(self.b, self.c)
        if not self.p >= 0:
            raise DomainError(f"p must be non-negative, got {self.p}")


def _check_bc(b: float, c: float) -> None:
    if not (c > b > 0):
        raise DomainError(f"need c > b > 0, got b={b}, c={c}")


def _normalized(est, norm: float) -> Estimate:
    return Estimate(est.value / norm, est.err_estimate / norm, est.evaluations, est.converged)


# -- series ------------------------------------------------------------------------------


def _beta_ratio_series(b: float, c: float, z: float, p: float, params: MLParams,
                       weight_ratio: Callable[[int], float], rel_tol: float,
                       max_terms: int = 3000) -> Estimate:
    """sum_n w_n B_p(b+n, c-b)/B(b, c-b) z**n with w_0 = 1, w_(n+1) = w_n * weight_ratio(n).

    Coefficients are computed in blocks of integrals sharing one set of
    nodes, each to relative accuracy ``max(rel_tol/(n+1)**2, 1e-13)``.
    """
    cb = c - b
    norm = beta_fn(b, cb)
    coeffs: list[float] = []
    coeff_err: list[float] = []
    stats = {"evaluations": 0, "converged": True}

    def extend():
        m = np.arange(len(coeffs), len(coeffs) + _BLOCK, dtype=float)
        tols = np.maximum(rel_tol / (m + 1.0) ** 2, COEFF_TOL_FLOOR)
        est = ml_beta_p_many(b + m, cb, p, params, rel_tol=tols)
        coeffs.extend(est.values / norm)
        coeff_err.extend(est.err_estimates / norm)
        stats["evaluations"] += est.evaluations
        stats["converged"] &= est.converged

    weight = [0, 1.0]
    propagated = [0.0]

    def term(n: int) -> float:
        while weight[0] < n:
            weight[1] *= weight_ratio(weight[0])
            weight[0] += 1
        if weight[1] == 0.0:
            return 0.0
        while len(coeffs) <= n:
            extend()
        scale = weight[1] * z ** n
        propagated[0] += abs(scale) * coeff_err[n]
        return scale * coeffs[n]

    est = sum_series(term, rel_tol=min(1e-3 * rel_tol, 1e-16), max_terms=max_terms)
    return Estimate(est.value, est.err_estimate + propagated[0], stats["evaluations"],
                    est.converged and stats["converged"])


# -- Gauss type ---------------------------------------------------------------------------


def _ghf_unit(a, b, c, z, p, params, rel_tol) -> Estimate:
    if z > 1:
        raise DomainError(f"integral representation needs z <= 1, got {z}")
    extra = (0.0, -a if z == 1.0 else 0.0)
    est = ml_beta_p_many(b, c - b, p, params, rel_tol=rel_tol, factor_exponents=extra,
                         factor=lambda t, tc: (tc + (1.0 - z) * t) ** (-a))
    return _normalized(est[0], beta_fn(b, c - b))


def ml_2f1_unit_many(a: float, b: float, c: float, zs, p: float, params: MLParams, *,
                     rel_tol: float = 1e-12) -> np.ndarray:
    """``F_p(a, b; c; z)`` for several ``z < 1`` on one shared set of nodes.

    Sharing nodes makes the quadrature error a smooth function of ``z``,
    which is what finite differences in ``z`` need.
    """
    zs = np.asarray(zs, dtype=float)
    if np.any(zs >= 1):
        raise DomainError("integral representation needs z < 1")
    n = zs.size
    est = ml_beta_p_many(np.full(n, b), c - b, p, params, rel_tol=rel_tol,
                         factor=lambda t, tc: (tc[None, :] + (1.0 - zs)[:, None] * t[None, :]) ** (-a))
    return est.values / beta_fn(b, c - b)


def _ghf_semi_infinite(a, b, c, z, p, params, rel_tol) -> Estimate:
    if z >= 1:
        raise DomainError(f"semi-infinite representation needs z < 1, got {z}")
    r = tail_order(params) if p > 0 else 0.0
    _endpoint_exponents(b, c - b, p, params)

    def f(u):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            arg = p * (1.0 + u) ** 2 / u if p > 0 else 0.0 * u
            kern = ml3_negative(params, np.minimum(arg, 1e300))
            log_w = (b - 1) * np.log(u) + (a - c) * np.log1p(u) - a * np.log1p(u * (1.0 - z))
            out = np.exp(log_w) * kern
        return np.where(kern == 0.0, 0.0, out)

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0, endpoint_exponents=(b - 1 + r, 0.0))
    est = integrate_semi_infinite(f, cfg, decay=b - c - 1 - r)
    return _normalized(est, beta_fn(b, c - b))


def _ghf_trig(a, b, c, z, p, params, rel_tol) -> Estimate:
    if z >= 1:
        raise DomainError(f"trigonometric representation needs z < 1, got {z}")
    r = tail_order(params) if p > 0 else 0.0
    _endpoint_exponents(b, c - b, p, params)
    half_pi = 0.5 * math.pi

    def f(t, tc):
        s = np.sin(half_pi * t)
        co = np.sin(half_pi * tc)
        s2, c2 = s * s, co * co
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            arg = p / (s2 * c2) if p > 0 else 0.0 * t
            kern = ml3_negative(params, np.minimum(arg, 1e300))
            log_w = (2 * b - 1) * np.log(s) + (2 * c - 2 * b - 1) * np.log(co) \
                - a * np.log(c2 + (1.0 - z) * s2)
            out = math.pi * np.exp(log_w) * kern
        return np.where(kern == 0.0, 0.0, out)

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0,
                           endpoint_exponents=(2 * b - 1 + 2 * r, 2 * (c - b) - 1 + 2 * r))
    est = integrate_unit(f, cfg, complement=True)
    return _normalized(est, beta_fn(b, c - b))


def _log_sinh_cosh(v):
    """log sinh(v) and log cosh(v) without overflow."""
    e = np.exp(-2.0 * v)
    big = v + np.log1p(-e) - math.log(2.0)
    with np.errstate(divide="ignore"):
        small = np.log(np.sinh(np.minimum(v, 1.0)))
    log_sinh = np.where(v > 1.0, big, small)
    log_cosh = v + np.log1p(e) - math.log(2.0)
    return log_sinh, log_cosh


def _ghf_tanh(a, b, c, z, p, params, rel_tol) -> Estimate:
    if z >= 1:
        raise DomainError(f"hyperbolic representation needs z < 1, got {z}")
    r = tail_order(params) if p > 0 else 0.0
    _endpoint_exponents(b, c - b, p, params)

    def f(v):
        ls, lc = _log_sinh_cosh(v)
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            arg = np.exp(math.log(p) + 4 * lc - 2 * ls) if p > 0 else 0.0 * v
            kern = ml3_negative(params, np.minimum(arg, 1e300))
            # cosh**2 - z sinh**2 = 1 + (1 - z) sinh**2
            log_mix = np.logaddexp(0.0, math.log1p(-z) + 2 * ls)
            log_w = (2 * b - 1) * ls + (2 * a - 2 * c + 1) * lc - a * log_mix
            out = 2.0 * np.exp(log_w) * kern
        return np.where(kern == 0.0, 0.0, out)

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0, endpoint_exponents=(2 * b - 1 + 2 * r, 0.0))
    est = integrate_semi_infinite(f, cfg, decay=-math.inf)
    return _normalized(est, beta_fn(b, c - b))


def ml_2f1(a: float, b: float, c: float, z: float, p: float, params: MLParams,
           method: str = "auto", *, rel_tol: float = 1e-10) -> Estimate:
    """Generalized Gauss function ``F_p(a, b; c; z)`` for real ``z < 1``.

    Parameters
    ----------
    method : {"auto", "series", "unit", "semi-infinite", "trig", "tanh"}
        ``"series"`` sums the defining series (``|z| < 1``) with every
        coefficient ``B_p(b+n, c-b)`` obtained by quadrature.  The other four
        are the integral forms over ``(0, 1)``, ``(0, inf)`` after
        ``t = u/(1+u)``, ``(0, pi/2)`` after ``t = sin(v)**2`` and ``(0, inf)``
        after ``t = tanh(v)**2``.  ``"auto"`` takes the series for
        ``|z| <= 0.7`` and the unit-interval integral otherwise.
    """
    MLHypPoint(a, b, c, z, p, params)
    if method == "auto":
        method = "series" if abs(z) <= GHF_SERIES_RADIUS else "unit"
    if method == "series":
        if abs(z) >= 1:
            raise DomainError(f"series needs |z| < 1, got {z}")
        return _beta_ratio_series(b, c, z, p, params, lambda n: (a + n) / (n + 1.0), rel_tol)
    if method == "unit":
        return _ghf_unit(a, b, c, z, p, params, rel_tol)
    if method == "semi-infinite":
        return _ghf_semi_infinite(a, b, c, z, p, params, rel_tol)
    if method == "trig":
        return _ghf_trig(a, b, c, z, p, params, rel_tol)
    if method == "tanh":
        return _ghf_tanh(a, b, c, z, p, params, rel_tol)
    raise ValueError(f"unknown method {method!r}; expected one of {GHF_METHODS}")


# -- confluent type ------------------------------------------------------------------------


def ml_1f1(b: float, c: float, z: float, p: float, params: MLParams,
           method: str = "auto", *, rel_tol: float = 1e-10) -> Estimate:
    """Generalized confluent function ``Phi_p(b; c; z)`` for real ``z``.

    ``method`` is ``"series"``, ``"direct"`` (weight ``exp(z t)``),
    ``"reflected"`` (weight ``exp(z (1 - t))`` after ``t -> 1 - t``) or
    ``"auto"``: the series for ``|z| <= 2``, the direct integral otherwise.
    """
    _check_bc(b, c)
    if not p >= 0:
        raise DomainError(f"p must be non-negative, got {p}")
    if method == "auto":
        method = "series" if abs(z) <= CHF_SERIES_RADIUS else "direct"
    norm = beta_fn(b, c - b)
    if method == "series":
        return _beta_ratio_series(b, c, z, p, params, lambda n: 1.0 / (n + 1.0), rel_tol)
    if method == "direct":
        est = ml_beta_p_many(b, c - b, p, params, rel_tol=rel_tol,
                             factor=lambda t, tc: np.exp(z * t))
        return _normalized(est[0], norm)
    if method == "reflected":
        est = ml_beta_p_many(c - b, b, p, params, rel_tol=rel_tol,
                             factor=lambda t, tc: np.exp(z * tc))
        return _normalized(est[0], norm)
    raise ValueError(f"unknown method {method!r}; expected one of {CHF_METHODS}")


def ml_1f1_many(b: float, c: float, zs, p: float, params: MLParams, *,
                rel_tol: float = 1e-12) -> np.ndarray:
    """``Phi_p(b; c; z)`` for several ``z`` on one shared set of nodes."""
    _check_bc(b, c)
    zs = np.asarray(zs, dtype=float)
    est = ml_beta_p_many(np.full(zs.size, b), c - b, p, params, rel_tol=rel_tol,
                         factor=lambda t, tc: np.exp(zs[:, None] * t[None, :]))
    return est.values / beta_fn(b, c - b)


# -- derivatives -----------------------------------------------------------------------------


def _times(est: Estimate, factor: float) -> Estimate:
    return Estimate(factor * est.value, abs(factor) * est.err_estimate, est.evaluations,
                    est.converged)


def ml_2f1_nth_derivative(n: int, a: float, b: float, c: float, z: float, p: float,
                          params: MLParams, method: str = "auto", *,
                          rel_tol: float = 1e-10) -> Estimate:
    """``d^n/dz^n F_p(a, b; c; z) = (a)_n (b)_n / (c)_n F_p(a+n, b+n; c+n; z)``."""
    if n < 0:
        raise DomainError("derivative order must be non-negative")
    factor = pochhammer(a, n) * pochhammer(b, n) / pochhammer(c, n)
    return _times(ml_2f1(a + n, b + n, c + n, z, p, params, method, rel_tol=rel_tol), factor)


def ml_1f1_nth_derivative(n: int, b: float, c: float, z: float, p: float, params: MLParams,
                          method: str = "auto", *, rel_tol: float = 1e-10) -> Estimate:
    """``d^n/dz^n Phi_p(b; c; z) = (b)_n / (c)_n Phi_p(b+n; c+n; z)``."""
    if n < 0:
        raise DomainError("derivative order must be non-negative")
    factor = pochhammer(b, n) / pochhammer(c, n)
    return _times(ml_1f1(b + n, c + n, z, p, params, method, rel_tol=rel_tol), factor)


# -- transformations -------------------------------------------------------------------------


def pfaff_transform_rhs(a: float, b: float, c: float, z: float, p: float, params: MLParams,
                        method: str = "auto", *, rel_tol: float = 1e-10) -> Estimate:
    """``(1 - z)**-a F_p(a, c - b; c; z/(z - 1))``, which equals ``F_p(a, b; c; z)``.

    The third parameter of the transformed function is ``c``; the reading
    with ``b`` in that slot is examined by
    :func:`pfaff_printed_reading_diagnostic`.
    """
    if z >= 1:
        raise DomainError(f"Pfaff transformation needs z < 1, got {z}")
    w = z / (z - 1.0)
    return _times(ml_2f1(a, c - b, c, w, p, params, method, rel_tol=rel_tol), (1.0 - z) ** (-a))


@dataclass(frozen=True)
class PfaffDiagnostic:
    """Classical (p = 0, exponential kernel) test of two readings of the Pfaff map."""

    a: float
    b: float
    c: float
    z: float
    lhs: float
    rhs_c: float
    rhs_b: float

    @property
    def rel_diff_c(self) -> float:
        return abs(self.rhs_c - self.lhs) / abs(self.lhs)

    @property
    def rel_diff_b(self) -> float:
        return abs(self.rhs_b - self.lhs) / abs(self.lhs)


def pfaff_printed_reading_diagnostic(a: float, b: float, c: float, z: float) -> PfaffDiagnostic:
    """Evaluate ``(1-z)**-a 2F1(a, c-b; X; z/(z-1))`` with ``X = c`` and ``X = b``.

    At ``p = 0`` with the exponential kernel the generalized function is the
    classical one, so the correct reading must reproduce ``2F1(a, b; c; z)``.
    SciPy's ``hyp2f1`` is the independent counter-evaluation.
    """
    if z >= 1:
        raise DomainError("need z < 1")
    w = z / (z - 1.0)
    pre = (1.0 - z) ** (-a)
    lhs = float(special.hyp2f1(a, b, c, z))
    rhs_c = pre * float(special.hyp2f1(a, c - b, c, w))
    rhs_b = pre * float(special.hyp2f1(a, c - b, b, w))
    return PfaffDiagnostic(a, b, c, z, lhs, rhs_c, rhs_b)


def transform_one_minus_inv_z(a: float, b: float, c: float, z: float, p: float,
                              params: MLParams, method: str = "auto", *,
                              rel_tol: float = 1e-10) -> Estimate:
    """``z**a F_p(a, c - b; c; 1 - z)``, equal to ``F_p(a, b; c; 1 - 1/z)`` for ``z > 0``."""
    if not z > 0:
        raise DomainError(f"need z > 0, got {z}")
    return _times(ml_2f1(a, c - b, c, 1.0 - z, p, params, method, rel_tol=rel_tol), z ** a)


def transform_z_over_one_plus_z(a: float, b: float, c: float, z: float, p: float,
                                params: MLParams, method: str = "auto", *,
                                rel_tol: float = 1e-10) -> Estimate:
    """``(1 + z)**a F_p(a, c - b; c; -z)``, equal to ``F_p(a, b; c; z/(1 + z))`` for ``z > -1``.

    The argument of the transformed function is ``-z``: substituting
    ``z/(1+z)`` into the Pfaff map sends ``w/(w-1)`` to ``-z``.
    """
    if not z > -1:
        raise DomainError(f"need z > -1, got {z}")
    return _times(ml_2f1(a, c - b, c, -z, p, params, method, rel_tol=rel_tol), (1.0 + z) ** a)


def kummer_transform_rhs(b: float, c: float, z: float, p: float, params: MLParams,
                         method: str = "auto", *, rel_tol: float = 1e-10) -> Estimate:
    """``exp(z) Phi_p(c - b; c; -z)``, which equals ``Phi_p(b; c; z)``."""
    _check_bc(b, c)
    return _times(ml_1f1(c - b, c, -z, p, params, method, rel_tol=rel_tol), math.exp(z))


def recurrence_residual(a: float, b: float, c: float, z: float, p: float, params: MLParams,
                        *, tolerance: float = 1e-7, method: str = "auto",
                        rel_tol: float = 1e-10) -> CheckReport:
    """Check ``F_p(a+1, b; c; z) - F_p(a, b; c; z) = (b z / c) F_p(a+1, b+1; c+1; z)``."""
    f1 = ml_2f1(a + 1, b, c, z, p, params, method, rel_tol=rel_tol)
    f0 = ml_2f1(a, b, c, z, p, params, method, rel_tol=rel_tol)
    f2 = ml_2f1(a + 1, b + 1, c + 1, z, p, params, method, rel_tol=rel_tol)
    lhs = f1.value - f0.value
    rhs = b * z / c * f2.value
    point = EvalPoint(params=params, p=p, a=a, b=b, c=c, z=z)
    cost = f0.evaluations + f1.evaluations + f2.evaluations
    return compare(IdentityId.RECURRENCE_DELTA_A, point, lhs, rhs, tolerance, cost=cost)


def ml_2f1_at_one(a: float, b: float, c: float, p: float, params: MLParams, *,
                  rep: str = "unit", rel_tol: float = 1e-10) -> Estimate:
    """``F_p(a, b; c; 1) = B_p(b, c - a - b) / B(b, c - b)``.

    Converges for ``p = 0`` when ``c - a - b > 0``; for ``p > 0`` the kernel
    decay relaxes this to ``c - a - b - 1 + r > -1`` with ``r`` the tail order.
    ``rep`` selects the integral form of the beta function.
    """
    _check_bc(b, c)
    est = ml_beta_p(b, c - a - b, p, params, rep, rel_tol=rel_tol)
    return _normalized(est, beta_fn(b, c - b))


# -- Mellin transforms in p -----------------------------------------------------------------------


def ghf_mellin_rhs(a: float, b: float, c: float, z: float, s: float, params: MLParams) -> float:
    """Closed form of ``integral_0^inf p**(s-1) F_p(a, b; c; z) dp``."""
    _check_bc(b, c)
    ratio = beta_fn(b + s, c + s - b) / beta_fn(b, c - b)
    return ml_gamma_mellin(s, params) * ratio * gauss_2f1((a, b + s, c + 2 * s), z).value


def chf_mellin_rhs(b: float, c: float, z: float, s: float, params: MLParams) -> float:
    """Closed form of ``integral_0^inf p**(s-1) Phi_p(b; c; z) dp``."""
    _check_bc(b, c)
    ratio = beta_fn(b + s, c + s - b) / beta_fn(b, c - b)
    return ml_gamma_mellin(s, params) * ratio * kummer_1f1(b + s, c + 2 * s, z).value


def _mellin_of(b, c, weight, s, params, rel_tol) -> Estimate:
    norm = beta_fn(b, c - b)

    def values(p):
        est = ml_beta_p_many(b, c - b, p, params, rel_tol=0.01 * rel_tol, factor=weight)
        return est.values / norm, est.evaluations

    return mellin_in_p(values, s, tail_order(params), rel_tol=rel_tol)


def ghf_mellin_quadrature(a: float, b: float, c: float, z: float, s: float, params: MLParams,
                          *, rel_tol: float = 1e-5) -> Estimate:
    """Mellin transform of ``F_p(a, b; c; z)`` in ``p`` by nested quadrature."""
    _check_bc(b, c)
    if z >= 1:
        raise DomainError("need z < 1")
    return _mellin_of(b, c, lambda t, tc: (tc + (1.0 - z) * t) ** (-a), s, params, rel_tol)


def chf_mellin_quadrature(b: float, c: float, z: float, s: float, params: MLParams, *,
                          rel_tol: float = 1e-5) -> Estimate:
    """Mellin transform of ``Phi_p(b; c; z)`` in ``p`` by nested quadrature."""
    _check_bc(b, c)
    return _mellin_of(b, c, lambda t, tc: np.exp(z * t), s, params, rel_tol)
