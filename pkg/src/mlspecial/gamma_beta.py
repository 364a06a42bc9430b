"""Mittag-Leffler generalized gamma and beta functions.

    Gamma_p(x)  = integral_0^inf t**(x-1) E(-t - p/t) dt
    B_p(x, y)   = integral_0^1 t**(x-1) (1-t)**(y-1) E(-p / (t (1-t))) dt

with ``E`` the Prabhakar function for the parameters in :class:`MLParams`.

Integrability is screened before any quadrature starts.  For ``p > 0`` the
kernel decays like ``(t (1-t))**r`` at both ends, where ``r`` is the tail
order of the Prabhakar function, so the effective endpoint exponents are
``x - 1 + r`` and ``y - 1 + r``.  Divergent combinations raise
:class:`DomainError` instead of returning a number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy.special import gamma as _gamma
from scipy.special import rgamma

from .classical import beta_fn
from .errors import DomainError
from .mittag_leffler import MLParams, ml3_negative, tail_order
from .numerics import (
    Estimate,
    Estimates,
    QuadratureConfig,
    integrate_semi_infinite,
    integrate_semi_infinite_many,
    integrate_unit,
    integrate_unit_many,
)

__all__ = [
    "Affine",
    "BetaArgs",
    "MELLIN_S_MIN",
    "REPRESENTATIONS",
    "beta_mellin_quadrature",
    "mellin_beta_rhs",
    "mellin_in_p",
    "ml_beta_p",
    "ml_beta_p_many",
    "ml_gamma_mellin",
    "ml_gamma_p",
    "ml_gamma_product_polar",
]

MELLIN_S_MIN = 1e-3
REPRESENTATIONS = ("unit", "trig", "semi-infinite", "symmetric", "affine")


@dataclass(frozen=True)
class Affine:
    """Beta integral carried over the interval ``(lo, hi)``."""

    lo: float = 0.0
    hi: float = 1.0

    def __post_init__(self):
        if not self.hi > self.lo:
            raise DomainError(f"affine representation needs hi > lo, got ({self.lo}, {self.hi})")


BetaRepresentation = Union[str, Affine]


@dataclass(frozen=True)
class BetaArgs:
    """Arguments ``(x, y, p)`` of the generalized beta function.

    ``p = 0`` needs ``x, y > 0``.  For ``p > 0`` non-positive ``x`` or ``y``
    are accepted here and left to the integrability screen.
    """

    x: float
    y: float
    p: float

    def __post_init__(self):
        if not self.p >= 0:
            raise DomainError(f"p must be non-negative, got {self.p}")
        if self.p == 0 and not (self.x > 0 and self.y > 0):
            raise DomainError(f"p = 0 needs x, y > 0, got ({self.x}, {self.y})")


def _kernel_order(p: float, params: MLParams) -> float:
    return tail_order(params) if p > 0 else 0.0


def _endpoint_exponents(x: float, y: float, p: float, params: MLParams) -> tuple[float, float]:
    r = _kernel_order(p, params)
    mu, nu = x - 1.0 + r, y - 1.0 + r
    if mu <= -1.0 or nu <= -1.0:
        raise DomainError(
            f"beta integral diverges: endpoint exponents ({mu:.6g}, {nu:.6g}) for "
            f"x={x}, y={y}, p={p}, params={params}")
    return mu, nu


# -- generalized gamma -------------------------------------------------------------


def ml_gamma_p(x: float, p: float, params: MLParams, *, rel_tol: float = 1e-10) -> Estimate:
    """Generalized gamma function ``Gamma_p(x)`` by semi-infinite quadrature.

    Raises
    ------
    DomainError
        If the integral diverges: at infinity unless ``x`` is below the tail
        order of the kernel, at the origin unless ``x > 0`` (``p = 0``) or
        ``x`` exceeds minus the tail order (``p > 0``).
    """
    if p < 0:
        raise DomainError(f"p must be non-negative, got {p}")
    r = tail_order(params)
    if not x < r:
        raise DomainError(
            f"gamma integral diverges at infinity: kernel decays like t**-{r:g}, x={x}")
    mu = x - 1.0 + (r if p > 0 else 0.0)
    if mu <= -1.0:
        raise DomainError(f"gamma integral diverges at the origin for x={x}, p={p}")

    def f(t):
        arg = t + p / t if p > 0 else t
        return _power_times(t, x - 1.0, ml3_negative(params, arg))

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0, endpoint_exponents=(mu, 0.0))
    return integrate_semi_infinite(f, cfg, decay=x - 1.0 - r)


def _power_times(t, exponent, kernel):
    """t**exponent * kernel, with 0 wherever the kernel underflows to 0."""
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        out = np.exp(exponent * np.log(t)) * kernel
    return np.where(kernel == 0.0, 0.0, out)


# -- generalized beta ------------------------------------------------------------------


def ml_beta_p_many(x, y, p, params: MLParams, *, rel_tol=1e-10,
                   factor: Callable | None = None, factor_exponents=(0.0, 0.0),
                   max_subdivisions: int = 2000) -> Estimates:
    """Several unit-interval beta integrals sharing one set of quadrature nodes.

    ``x``, ``y``, ``p`` broadcast to a common 1-d shape.  ``factor(t, 1 - t)``,
    if given, multiplies the integrands (hypergeometric weights); it returns
    either one row for all components or one row per component.
    ``factor_exponents`` adds the factor's own power behavior at the two
    endpoints.  ``rel_tol`` may be an array with one tolerance per component.
    """
    x, y, p = (np.atleast_1d(np.asarray(v, dtype=float)) for v in (x, y, p))
    x, y, p = np.broadcast_arrays(x, y, p)
    if np.any(p < 0):
        raise DomainError("p must be non-negative")
    exps = [_endpoint_exponents(xi, yi, pi, params) for xi, yi, pi in zip(x, y, p)]
    mu = min(e[0] for e in exps) + factor_exponents[0]
    nu = min(e[1] for e in exps) + factor_exponents[1]
    if mu <= -1.0 or nu <= -1.0:
        raise DomainError(f"integral diverges: endpoint exponents ({mu:.6g}, {nu:.6g})")
    p_unique, p_index = np.unique(p, return_inverse=True)
    xm1 = (x - 1.0)[:, None]
    ym1 = (y - 1.0)[:, None]

    def f(t, tc):
        tt = np.maximum(t * tc, 1e-300)
        kern = ml3_negative(params, p_unique[:, None] / tt[None, :])[p_index]
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            vals = np.exp(xm1 * np.log(t)[None, :] + ym1 * np.log(tc)[None, :]) * kern
        vals = np.where(kern == 0.0, 0.0, vals)
        if factor is not None:
            weight = np.asarray(factor(t, tc))
            vals = vals * (weight if weight.ndim == 2 else weight[None, :])
        return vals

    rtol = np.broadcast_to(np.asarray(rel_tol, dtype=float), x.shape)
    cfg = QuadratureConfig(rel_tol=float(rtol.max()), abs_tol=0.0,
                           max_subdivisions=max_subdivisions, endpoint_exponents=(mu, nu))
    return integrate_unit_many(f, cfg, complement=True, rel_tols=rtol)


def _beta_trig(x, y, p, params, rel_tol):
    r = _kernel_order(p, params)
    half_pi = 0.5 * math.pi

    def f(t, tc):
        s = np.sin(half_pi * t)
        c = np.sin(half_pi * tc)  # cos(pi t / 2) without cancellation near t = 1
        kern = ml3_negative(params, p / (c * c * s * s)) if p > 0 else ml3_negative(params, 0.0 * t)
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            out = np.pi * np.exp((2 * x - 1) * np.log(c) + (2 * y - 1) * np.log(s)) * kern
        return np.where(kern == 0.0, 0.0, out)

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0,
                           endpoint_exponents=(2 * y - 1 + 2 * r, 2 * x - 1 + 2 * r))
    return integrate_unit(f, cfg, complement=True)


def _beta_semi_infinite(x, y, p, params, rel_tol):
    r = _kernel_order(p, params)

    def f(u):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            kern = ml3_negative(params, p * (1.0 + u) ** 2 / u) if p > 0 else ml3_negative(params, 0.0 * u)
            out = np.exp((x - 1) * np.log(u) - (x + y) * np.log1p(u)) * kern
        return np.where(kern == 0.0, 0.0, out)

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0, endpoint_exponents=(x - 1 + r, 0.0))
    return integrate_semi_infinite(f, cfg, decay=-(y + 1.0) - r)


def _beta_interval(x, y, p, params, rel_tol, lo, hi):
    """(hi-lo)**(1-x-y) integral_lo^hi (u-lo)**(x-1) (hi-u)**(y-1) E(-p (hi-lo)**2/((u-lo)(hi-u))) du."""
    r = _kernel_order(p, params)
    width = hi - lo

    def f(t, tc):
        left = width * t
        right = width * tc
        arg = p * width * width / np.maximum(left * right, 1e-300) if p > 0 else 0.0 * t
        kern = ml3_negative(params, arg)
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            out = np.exp((1 - x - y) * math.log(width) + (x - 1) * np.log(left)
                         + (y - 1) * np.log(right)) * kern * width
        return np.where(kern == 0.0, 0.0, out)

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0,
                           endpoint_exponents=(x - 1 + r, y - 1 + r))
    return integrate_unit(f, cfg, complement=True)


def ml_beta_p(x: float, y: float, p: float, params: MLParams,
              rep: BetaRepresentation = "unit", *, rel_tol: float = 1e-10) -> Estimate:
    """Generalized beta function ``B_p(x, y)``.

    Parameters
    ----------
    x, y, p : float
        Arguments; ``p >= 0``.
    params : MLParams
        Kernel parameters.
    rep : {"unit", "trig", "semi-infinite", "symmetric"} or Affine
        Which of the equivalent integral forms to evaluate.  ``"unit"`` is the
        defining integral over ``(0, 1)``; ``"trig"`` substitutes
        ``t = cos(theta)**2``; ``"semi-infinite"`` substitutes
        ``t = u/(1+u)``; ``"symmetric"`` is the form over ``(-1, 1)``; an
        :class:`Affine` instance (or ``"affine"`` for ``(0, 1)``) carries the
        integral over an arbitrary interval.
    rel_tol : float
        Target relative accuracy.

    Returns
    -------
    Estimate
    """
    BetaArgs(x, y, p)
    _endpoint_exponents(x, y, p, params)
    if rep == "affine":
        rep = Affine()
    if isinstance(rep, Affine):
        if rep == Affine():
            return ml_beta_p_many(x, y, p, params, rel_tol=rel_tol)[0]
        return _beta_interval(x, y, p, params, rel_tol, rep.lo, rep.hi)
    if rep == "unit":
        return ml_beta_p_many(x, y, p, params, rel_tol=rel_tol)[0]
    if rep == "trig":
        # 2 * integral_0^(pi/2) ... d(theta), theta = pi t / 2
        return _beta_trig(x, y, p, params, rel_tol)
    if rep == "semi-infinite":
        return _beta_semi_infinite(x, y, p, params, rel_tol)
    if rep == "symmetric":
        return _beta_interval(x, y, p, params, rel_tol, -1.0, 1.0)
    raise ValueError(f"unknown representation {rep!r}")


# -- product form ---------------------------------------------------------------------


def ml_gamma_product_polar(x: float, y: float, p: float, params: MLParams, *,
                           rel_tol: float = 1e-6) -> Estimate:
    """``Gamma_p(x) Gamma_p(y)`` as the double integral in polar coordinates.

        4 int_0^(pi/2) int_0^inf r**(2(x+y)-1) cos(th)**(2x-1) sin(th)**(2y-1)
          E(-r**2 cos**2 - p/(r**2 cos**2)) E(-r**2 sin**2 - p/(r**2 sin**2)) dr dth

    The inner ``r`` integrals for all ``theta`` nodes of an outer panel batch
    are computed together.
    """
    r = tail_order(params)
    if not (x < r and y < r):
        raise DomainError(f"product integral diverges at infinity for x={x}, y={y}")
    if p == 0 and not (x > 0 and y > 0):
        raise DomainError("p = 0 needs x, y > 0")
    k = r if p > 0 else 0.0
    inner_mu = 2 * (x + y) - 1 + 4 * k
    inner_decay = 2 * (x + y) - 1 - 4 * r
    inner_tol = 0.05 * rel_tol
    half_pi = 0.5 * math.pi
    evaluations = [0]

    def outer(t, tc):
        s = np.sin(half_pi * t)
        c = np.sin(half_pi * tc)
        c2 = (c * c)[:, None]
        s2 = (s * s)[:, None]

        def inner(rad):
            r2 = (rad * rad)[None, :]
            a1 = r2 * c2 + (p / (r2 * c2) if p > 0 else 0.0)
            a2 = r2 * s2 + (p / (r2 * s2) if p > 0 else 0.0)
            kern = ml3_negative(params, a1) * ml3_negative(params, a2)
            with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
                out = np.exp((2 * (x + y) - 1) * np.log(rad))[None, :] * kern
            return np.where(kern == 0.0, 0.0, out)

        cfg = QuadratureConfig(rel_tol=inner_tol, abs_tol=0.0, endpoint_exponents=(inner_mu, 0.0))
        est = integrate_semi_infinite_many(inner, cfg, decay=inner_decay)
        evaluations[0] += est.evaluations
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            ang = np.exp((2 * x - 1) * np.log(c) + (2 * y - 1) * np.log(s))
        return 2.0 * math.pi * ang * est.values

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0, endpoint_exponents=(2 * y - 1, 2 * x - 1))
    est = integrate_unit(outer, cfg, complement=True)
    return Estimate(est.value, est.err_estimate, evaluations[0], est.converged)


# -- Mellin transforms in p ---------------------------------------------------------------


def ml_gamma_mellin(s: float, params: MLParams) -> float:
    """``integral_0^inf u**(s-1) E(-u) du`` in closed form.

    Equals ``Gamma(s) Gamma(gamma - s) / (Gamma(gamma) Gamma(beta - alpha s))``
    for ``0 < s < gamma``; the reciprocal gamma makes it exactly zero when
    ``beta - alpha s`` is a non-positive integer.
    """
    a, b, g = params.astuple()
    if not (0 < s < g):
        raise DomainError(f"Mellin transform needs 0 < s < gamma={g}, got s={s}")
    return float(_gamma(s) * _gamma(g - s) * rgamma(g) * rgamma(b - a * s))


def mellin_beta_rhs(x: float, y: float, s: float, params: MLParams) -> float:
    """Closed form of the Mellin transform of ``B_p(x, y)`` in ``p``."""
    if s < MELLIN_S_MIN:
        raise DomainError(f"s={s} is below {MELLIN_S_MIN}; the transform blows up like Gamma(s)")
    if not (x + s > 0 and y + s > 0):
        raise DomainError("need x + s > 0 and y + s > 0")
    return ml_gamma_mellin(s, params) * beta_fn(x + s, y + s)


def mellin_in_p(values: Callable[[np.ndarray], tuple[np.ndarray, int]], s: float,
                decay: float, *, rel_tol: float = 1e-5) -> Estimate:
    """``integral_0^inf p**(s-1) g(p) dp`` for a batch-evaluated ``g``.

    ``values(p)`` returns ``(g(p), evaluations)`` for an array of ``p``;
    ``g(p) ~ p**-decay`` for large ``p`` and ``g(0)`` is finite.
    """
    if s <= 0:
        raise DomainError("Mellin variable must be positive")
    if not s < decay:
        raise DomainError(f"Mellin integral diverges: s={s} >= decay order {decay}")
    count = [0]

    def f(p):
        g, n = values(p)
        count[0] += n
        with np.errstate(divide="ignore"):
            return np.exp((s - 1.0) * np.log(p)) * g

    cfg = QuadratureConfig(rel_tol=rel_tol, abs_tol=0.0, endpoint_exponents=(s - 1.0, 0.0))
    est = integrate_semi_infinite(f, cfg, decay=s - 1.0 - decay)
    return Estimate(est.value, est.err_estimate, count[0], est.converged)


def beta_mellin_quadrature(x: float, y: float, s: float, params: MLParams, *,
                           rel_tol: float = 1e-5) -> Estimate:
    """Mellin transform of ``B_p(x, y)`` in ``p`` by nested quadrature."""
    BetaArgs(x, y, 0.0)

    def values(p):
        est = ml_beta_p_many(x, y, p, params, rel_tol=0.01 * rel_tol)
        return est.values, est.evaluations

    return mellin_in_p(values, s, tail_order(params), rel_tol=rel_tol)
