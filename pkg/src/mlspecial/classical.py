"""Classical gamma, beta and hypergeometric functions, and their exp-kernel extensions.

These serve as the reference values for every reduction of the Mittag-Leffler
family: ``(alpha, beta, gamma) = (1, 1, 1)`` turns the kernel into
``exp(-p / (t (1 - t)))`` and ``p = 0`` removes it altogether.

All quadrature-based routines here run at ``rel_tol = 1e-12`` so that their
own error is negligible next to the ``1e-10`` used by the generalized family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import DomainError, PoleError
from .numerics import Estimate, QuadratureConfig, integrate_semi_infinite, integrate_unit, sum_series

__all__ = [
    "HypArgs",
    "beta_fn",
    "chaudhry_1f1",
    "chaudhry_2f1",
    "chaudhry_beta_p",
    "chaudhry_gamma_p",
    "gamma_fn",
    "gauss_2f1",
    "kummer_1f1",
    "pochhammer",
]

ORACLE_TOL = 1e-12
SERIES_RADIUS = 0.8


@dataclass(frozen=True)
class HypArgs:
    """Parameters ``(a, b, c)`` of a Gauss function; requires ``c > b > 0``."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.c > self.b > 0):
            raise DomainError(f"need c > b > 0, got b={self.b}, c={self.c}")


def _hyp(h) -> HypArgs:
    return h if isinstance(h, HypArgs) else HypArgs(*h)


def gamma_fn(x: float) -> float:
    """Gamma function; negative non-integers are allowed through reflection."""
    if x <= 0 and float(x).is_integer():
        raise PoleError(f"gamma has a pole at {x}")
    try:
        return math.gamma(x)
    except OverflowError:
        return math.inf


def beta_fn(x: float, y: float) -> float:
    """Euler beta function ``Gamma(x) Gamma(y) / Gamma(x + y)`` for ``x, y > 0``."""
    if not (x > 0 and y > 0):
        raise DomainError(f"beta needs positive arguments, got ({x}, {y})")
    return float(special.beta(x, y))


def pochhammer(a: float, n: int) -> float:
    """Rising factorial ``a (a + 1) ... (a + n - 1)``; overflow gives ``inf``."""
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    out = 1.0
    for j in range(int(n)):
        out *= a + j
    return out


def _beta_config(mu: float, nu: float) -> QuadratureConfig:
    return QuadratureConfig(rel_tol=ORACLE_TOL, abs_tol=0.0, endpoint_exponents=(mu, nu))


def _beta_weighted(b: float, cb: float, factor, p: float = 0.0) -> Estimate:
    """(1/B(b, cb)) * integral of t**(b-1) (1-t)**(cb-1) factor(t, 1-t) exp(-p/(t(1-t)))."""
    norm = beta_fn(b, cb)

    def f(t, tc):
        log_w = (b - 1.0) * np.log(t) + (cb - 1.0) * np.log(tc)
        if p > 0:
            log_w = log_w - p / (t * tc)
        return np.exp(log_w) * factor(t, tc)

    mu, nu = (b - 1.0, cb - 1.0) if p == 0 else (math.inf, math.inf)
    est = integrate_unit(f, _beta_config(mu, nu), complement=True)
    return Estimate(est.value / norm, est.err_estimate / norm, est.evaluations, est.converged)


def gauss_2f1(h, z: float, *, method: str = "auto") -> Estimate:
    """Gauss hypergeometric function ``2F1(a, b; c; z)`` for real ``z < 1``.

    ``method`` is ``"series"`` (``|z| < 1``), ``"integral"`` (Euler integral,
    ``z < 1``) or ``"auto"``, which takes the series for ``|z| <= 0.8``.
    """
    h = _hyp(h)
    if method == "auto":
        method = "series" if abs(z) <= SERIES_RADIUS else "integral"
    if method == "series":
        if abs(z) >= 1:
            raise DomainError(f"series needs |z| < 1, got {z}")
        a, b, c = h.a, h.b, h.c
        state = [0, 1.0]

        def term(n):
            while state[0] < n:
                m = state[0]
                state[1] *= (a + m) * (b + m) / ((c + m) * (m + 1.0)) * z
                state[0] += 1
            return state[1]

        return sum_series(term, rel_tol=1e-17, max_terms=20000)
    if method == "integral":
        if z >= 1:
            raise DomainError(f"integral representation needs z < 1, got {z}")
        a = h.a
        return _beta_weighted(h.b, h.c - h.b, lambda t, tc: (tc + (1.0 - z) * t) ** (-a))
    raise ValueError(f"unknown method {method!r}")


def kummer_1f1(b: float, c: float, z: float, *, method: str = "auto") -> Estimate:
    """Confluent hypergeometric function ``1F1(b; c; z)`` for ``c > b > 0``.

    ``"auto"`` sums the series, first applying ``1F1(b; c; z) =
    exp(z) 1F1(c - b; c; -z)`` when ``z < 0`` so that all terms are positive.
    ``"integral"`` uses the Euler integral.
    """
    if not (c > b > 0):
        raise DomainError(f"need c > b > 0, got b={b}, c={c}")
    if method == "integral":
        return _beta_weighted(b, c - b, lambda t, tc: np.exp(z * t))
    if method not in ("auto", "series"):
        raise ValueError(f"unknown method {method!r}")
    scale = 1.0
    if method == "auto" and z < 0:
        b, z, scale = c - b, -z, math.exp(z)
    state = [0, 1.0]

    def term(n):
        while state[0] < n:
            m = state[0]
            state[1] *= (b + m) / ((c + m) * (m + 1.0)) * z
            state[0] += 1
        return state[1]

    est = sum_series(term, rel_tol=1e-17, max_terms=20000)
    return Estimate(scale * est.value, scale * est.err_estimate, est.evaluations, est.converged)


def chaudhry_gamma_p(x: float, p: float) -> Estimate:
    """Extended gamma ``integral_0^inf t**(x-1) exp(-t - p/t) dt``."""
    if p < 0:
        raise DomainError("p must be non-negative")
    if p == 0 and not x > 0:
        raise DomainError("x must be positive when p = 0")

    def f(t):
        return np.exp((x - 1.0) * np.log(t) - t - p / t)

    mu = x - 1.0 if p == 0 else math.inf
    cfg = QuadratureConfig(rel_tol=ORACLE_TOL, abs_tol=0.0, endpoint_exponents=(mu, 0.0))
    return integrate_semi_infinite(f, cfg, decay=-math.inf)


def chaudhry_beta_p(x: float, y: float, p: float) -> Estimate:
    """Extended beta ``integral_0^1 t**(x-1) (1-t)**(y-1) exp(-p/(t(1-t))) dt``."""
    if p < 0:
        raise DomainError("p must be non-negative")
    if p == 0 and not (x > 0 and y > 0):
        raise DomainError("x and y must be positive when p = 0")

    def f(t, tc):
        return np.exp((x - 1.0) * np.log(t) + (y - 1.0) * np.log(tc) - p / (t * tc))

    mu, nu = (x - 1.0, y - 1.0) if p == 0 else (math.inf, math.inf)
    return integrate_unit(f, _beta_config(mu, nu), complement=True)


def chaudhry_2f1(a: float, b: float, c: float, z: float, p: float) -> Estimate:
    """Extended Gauss function with the ``exp(-p/(t(1-t)))`` kernel, by direct quadrature."""
    if not (c > b > 0):
        raise DomainError(f"need c > b > 0, got b={b}, c={c}")
    if z >= 1:
        raise DomainError("need z < 1")
    return _beta_weighted(b, c - b, lambda t, tc: (tc + (1.0 - z) * t) ** (-a), p)


def chaudhry_1f1(b: float, c: float, z: float, p: float) -> Estimate:
    """Extended confluent function with the ``exp(-p/(t(1-t)))`` kernel, by direct quadrature."""
    if not (c > b > 0):
        raise DomainError(f"need c > b > 0, got b={b}, c={c}")
    return _beta_weighted(b, c - b, lambda t, tc: np.exp(z * t), p)
