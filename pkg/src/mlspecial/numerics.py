"""Adaptive quadrature and compensated series summation.

Every integral in the package is reduced to the unit interval and handed to
:func:`integrate_unit`.  The integrator is a globally adaptive Gauss-Kronrod
(7/15) scheme that refines panels in batches, so the integrand is always called
with a whole array of nodes at once.  Integrands may return one value per node
or a ``(k, nodes)`` array, in which case ``k`` integrals sharing the same nodes
are computed together.

Endpoint singularities ``t**mu`` and ``(1 - t)**nu`` are removed with a power
substitution on each half of the interval, which keeps the Kronrod rule working
on smooth functions.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NonConvergenceError

__all__ = [
    "Estimate",
    "Estimates",
    "QuadratureConfig",
    "integrate_semi_infinite",
    "integrate_semi_infinite_many",
    "integrate_unit",
    "integrate_unit_many",
    "sum_series",
]

_EPS = np.finfo(float).eps

# Kronrod 15 / Gauss 7 abscissae and weights (QUADPACK qk15).
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])

_NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[:7][::-1]])
_KRONROD = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[:7][::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5]] = _WG[:3]
_GAUSS[7] = _WG[3]
_GAUSS[[9, 11, 13]] = _WG[:3][::-1]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and endpoint information for one integral.

    ``endpoint_exponents = (mu, nu)`` says the integrand behaves like ``t**mu``
    near 0 and ``(1 - t)**nu`` near 1.  They only steer the substitution; a
    wrong guess costs panels, not accuracy.  Use ``math.inf`` for an endpoint
    where the integrand vanishes faster than any power.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    endpoint_exponents: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if not self.abs_tol >= 0:
            raise ValueError(f"abs_tol must be non-negative, got {self.abs_tol}")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")

    def replace(self, **changes) -> "QuadratureConfig":
        return dataclasses.replace(self, **changes)


@dataclass(frozen=True)
class Estimate:
    """A numerical value with its error estimate and cost."""

    value: float
    err_estimate: float
    evaluations: int
    converged: bool

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "err_estimate", float(self.err_estimate))
        object.__setattr__(self, "evaluations", int(self.evaluations))
        object.__setattr__(self, "converged", bool(self.converged))

    def require(self) -> "Estimate":
        """Return ``self``, raising :class:`NonConvergenceError` if not converged."""
        if not self.converged:
            raise NonConvergenceError(
                f"tolerance not met: value={self.value!r}, err={self.err_estimate:.3g}"
            )
        return self

    def __float__(self) -> float:
        return float(self.value)


@dataclass(frozen=True)
class Estimates:
    """Several integrals computed on a shared set of nodes."""

    values: np.ndarray
    err_estimates: np.ndarray
    evaluations: int
    converged: bool

    def __getitem__(self, i) -> Estimate:
        return Estimate(float(self.values[i]), float(self.err_estimates[i]),
                        self.evaluations, self.converged)

    def __len__(self) -> int:
        return len(self.values)


def _power(exponent: float) -> int:
    """Substitution power k for an endpoint behaving like s**exponent.

    With s = w**k the transformed integrand behaves like w**(k*(exponent+1)-1);
    k is chosen to push that exponent to at least 2.  Integer exponents are
    already smooth and keep k = 1.
    """
    if exponent <= -1:
        raise DomainError(f"endpoint exponent {exponent} is not integrable")
    if math.isinf(exponent) or exponent > 30:
        return 1
    if exponent >= 0 and float(exponent).is_integer():
        return 1
    return max(1, math.ceil(3.0 / (exponent + 1.0) - 1e-12))


def _gk15(g: np.ndarray, half: np.ndarray):
    """Kronrod value, error estimate and |f| integral for each panel.

    ``g`` has shape (k, panels, 15), ``half`` the panel half-widths.
    """
    resk = half * (g @ _KRONROD)
    resg = half * (g @ _GAUSS)
    absg = np.abs(g)
    resabs = half * (absg @ _KRONROD)
    mean = (g @ _KRONROD) * 0.5
    resasc = half * (np.abs(g - mean[..., None]) @ _KRONROD)
    err = np.abs(resk - resg)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc != 0) & (err != 0), scaled, err)
    err = np.maximum(err, 50.0 * _EPS * resabs)
    return resk, err, resabs


class _Panels:
    """Panels on the two halves of [0, 1] in substituted coordinates."""

    def __init__(self, f, complement: bool, powers: tuple[int, int]):
        self.f = f
        self.complement = complement
        self.powers = powers
        self.evaluations = 0

    def evaluate(self, side: np.ndarray, lo: np.ndarray, hi: np.ndarray):
        centre = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        w = centre[:, None] + half[:, None] * _NODES[None, :]
        k = np.where(side == 0, self.powers[0], self.powers[1])[:, None].astype(float)
        near = 0.5 * w ** k
        jac = 0.5 * k * w ** (k - 1.0)
        far = 1.0 - near
        t = np.where(side[:, None] == 0, near, far).ravel()
        tc = np.where(side[:, None] == 0, far, near).ravel()
        with np.errstate(all="ignore"):
            vals = self.f(t, tc) if self.complement else self.f(t)
        vals = np.asarray(vals, dtype=float)
        if vals.ndim == 1:
            vals = vals[None, :]
        self.evaluations += w.size
        vals = vals.reshape(vals.shape[0], *w.shape)
        with np.errstate(invalid="ignore", over="ignore"):
            g = np.where(jac > 0, vals * jac, 0.0)
        return _gk15(g, half)


def _adaptive(f, cfg: QuadratureConfig, complement: bool, rel_tols=None):
    mu, nu = cfg.endpoint_exponents
    panels = _Panels(f, complement, (_power(mu), _power(nu)))

    side = np.array([0, 0, 1, 1])
    lo = np.array([0.0, 0.5, 0.0, 0.5])
    hi = np.array([0.5, 1.0, 0.5, 1.0])
    val, err, rabs = panels.evaluate(side, lo, hi)
    k = val.shape[0]
    rtol = np.full(k, cfg.rel_tol) if rel_tols is None else np.asarray(rel_tols, float)

    converged = False
    while True:
        total = val.sum(axis=1)
        total_err = err.sum(axis=1)
        total_abs = rabs.sum(axis=1)
        tol = np.maximum(cfg.abs_tol, rtol * np.abs(total))
        floor = 100.0 * _EPS * total_abs
        if not np.all(np.isfinite(total)):
            break
        if np.all(total_err <= np.maximum(tol, floor)):
            converged = True
            break
        room = cfg.max_subdivisions - lo.size
        if room <= 0:
            break
        with np.errstate(divide="ignore", invalid="ignore"):
            score = np.max(np.where(tol[:, None] > 0, err / tol[:, None], err), axis=0)
        splittable = (hi - lo) > 4.0 * _EPS * np.maximum(hi, 1e-290)
        score = np.where(splittable, score, 0.0)
        if not np.any(score > 0):
            break
        order = np.lexsort((lo, side, -score))
        cumulative = np.cumsum(score[order])
        n_split = int(np.searchsorted(cumulative, 0.5 * cumulative[-1])) + 1
        n_split = max(1, min(n_split, room, int(np.count_nonzero(score > 0))))
        chosen = order[:n_split]
        keep = np.ones(lo.size, dtype=bool)
        keep[chosen] = False

        mid = 0.5 * (lo[chosen] + hi[chosen])
        new_side = np.concatenate([side[chosen], side[chosen]])
        new_lo = np.concatenate([lo[chosen], mid])
        new_hi = np.concatenate([mid, hi[chosen]])
        nval, nerr, nabs = panels.evaluate(new_side, new_lo, new_hi)

        side = np.concatenate([side[keep], new_side])
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        val = np.concatenate([val[:, keep], nval], axis=1)
        err = np.concatenate([err[:, keep], nerr], axis=1)
        rabs = np.concatenate([rabs[:, keep], nabs], axis=1)

    # fixed summation order: by side then left endpoint
    order = np.lexsort((lo, side))
    values = np.array([math.fsum(row) for row in val[:, order]])
    errors = err[:, order].sum(axis=1)
    return values, errors, panels.evaluations, converged


def integrate_unit(f: Callable, cfg: QuadratureConfig = QuadratureConfig(), *,
                   complement: bool = False) -> Estimate:
    """Integrate ``f`` over (0, 1).

    ``f`` receives an array of nodes.  With ``complement=True`` it is called as
    ``f(t, 1 - t)`` where the second argument is computed without cancellation,
    which matters for integrands with singular factors ``(1 - t)**nu``.

    Returns an :class:`Estimate`; when the subdivision budget runs out the best
    value is returned with ``converged=False``.
    """
    values, errors, n, ok = _adaptive(f, cfg, complement)
    if values.size != 1:
        raise ValueError("integrand returned several components; use integrate_unit_many")
    return Estimate(float(values[0]), float(errors[0]), n, ok)


def integrate_unit_many(f: Callable, cfg: QuadratureConfig = QuadratureConfig(), *,
                        complement: bool = False, rel_tols=None) -> Estimates:
    """Vector-valued version of :func:`integrate_unit`.

    ``f`` returns an array of shape ``(k, nodes)``; ``rel_tols`` optionally
    gives a separate relative tolerance for each component.
    """
    values, errors, n, ok = _adaptive(f, cfg, complement, rel_tols)
    return Estimates(values, errors, n, ok)


def _semi_infinite_exponents(cfg: QuadratureConfig, decay: float | None):
    mu, nu = cfg.endpoint_exponents
    if decay is not None:
        if decay >= -1:
            raise DomainError(f"integrand decays like u**{decay}; not integrable at infinity")
        nu = -decay - 2.0
    return cfg.replace(endpoint_exponents=(mu, nu))


def _dyadic_screen(f: Callable, rel_tol: float) -> None:
    """Raise DomainError when panel integrals over [2**j, 2**(j+1)] fail to shrink.

    Both ends are screened: j -> +inf for the tail and j -> -inf for the origin.
    """
    js = np.arange(-60, 61)
    lo = 2.0 ** js
    half = 0.5 * lo
    nodes = (lo + half)[:, None] + half[:, None] * _NODES[None, :]
    with np.errstate(all="ignore"):
        vals = np.asarray(f(nodes.ravel()), dtype=float).reshape(nodes.shape)
    panel = half * (vals @ _KRONROD)
    mags = np.abs(panel)
    if not np.all(np.isfinite(mags)):
        raise DomainError("integrand is not finite on the half-line")
    scale = max(float(mags.max()), 1e-300)
    for tail in (mags[-12:], mags[:12][::-1]):
        inner, outer = tail[0], tail[-1]
        if outer > rel_tol * scale and outer > 0.7 * inner:
            raise DomainError("dyadic panel integrals do not decay; integral diverges")


def _mapped(f: Callable) -> Callable:
    def g(t, tc):
        u = t / tc
        return np.asarray(f(u)) / (tc * tc)
    return g


def integrate_semi_infinite(f: Callable, cfg: QuadratureConfig = QuadratureConfig(), *,
                            decay: float | None = None) -> Estimate:
    """Integrate ``f`` over (0, inf) through the map ``u = t / (1 - t)``.

    ``cfg.endpoint_exponents[0]`` describes ``f`` near 0.  Pass ``decay`` when
    the algebraic decay ``f(u) ~ u**decay`` is known (``-math.inf`` for faster
    than any power); otherwise the tail is screened numerically and
    ``cfg.endpoint_exponents[1]`` is used for the mapped integrand near t = 1.
    """
    if decay is None:
        _dyadic_screen(f, cfg.rel_tol)
    mapped = _semi_infinite_exponents(cfg, decay)
    return integrate_unit(_mapped(f), mapped, complement=True)


def integrate_semi_infinite_many(f: Callable, cfg: QuadratureConfig = QuadratureConfig(), *,
                                 decay: float, rel_tols=None) -> Estimates:
    mapped = _semi_infinite_exponents(cfg, decay)
    return integrate_unit_many(_mapped(f), mapped, complement=True, rel_tols=rel_tols)


def sum_series(term: Callable[[int], float], rel_tol: float = 1e-12,
               max_terms: int = 10000) -> Estimate:
    """Sum ``term(0) + term(1) + ...`` with Neumaier compensation.

    Stops once three consecutive terms satisfy ``|term| <= rel_tol * |sum|``.
    The error estimate is the magnitude of the last term added.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    total = 0.0
    comp = 0.0
    quiet = 0
    last = 0.0
    for n in range(max_terms):
        t = float(term(n))
        s = total + t
        if abs(total) >= abs(t):
            comp += (total - s) + t
        else:
            comp += (t - s) + total
        total = s
        last = abs(t)
        if not math.isfinite(total):
            return Estimate(total + comp, math.inf, n + 1, False)
        if abs(t) <= rel_tol * abs(total + comp):
            quiet += 1
            if quiet == 3:
                return Estimate(total + comp, last, n + 1, True)
        else:
            quiet = 0
    return Estimate(total + comp, last, max_terms, False)
