"""Three-parameter (Prabhakar) Mittag-Leffler function on the real line.

    E(alpha, beta, gamma; z) = sum_n (gamma)_n z**n / (Gamma(alpha*n + beta) n!)

Every kernel in the package evaluates this function at arguments ``z = -u``
with ``u`` anywhere in ``[0, inf]``.  Plain Taylor summation loses all accuracy
on the negative axis long before the asymptotic regime begins, so the
negative-axis evaluator uses three regimes keyed on ``X = u**(1/alpha)``:

* ``X < 40``: Taylor series evaluated in double-double arithmetic from
  coefficients prepared once per parameter triple at 40 digits;
* ``X >= 40``: the algebraic large-argument expansion, optimally truncated,
  plus for ``alpha > 1`` the contribution of the two
  complex singularities of the Laplace transform (exponentially small for
  ``alpha < 2``, oscillating at ``alpha = 2``);
* ``alpha == 1``: the Kummer-transformed series, which is free of
  cancellation, and exact finite sums when ``beta - gamma`` is a non-positive
  integer.

At ``X = 40`` the truncation error of the expansion is about ``exp(-40)`` and
the Taylor terms stay below ``1e18`` times the result, which double-double
arithmetic absorbs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp
import numpy as np
from scipy.special import binom, gammaln, poch, rgamma

from .errors import DomainError
from .numerics import Estimate, sum_series

__all__ = [
    "MLParams",
    "X_CROSS",
    "ml3",
    "ml3_asymptotic",
    "ml3_negative",
    "ml3_series",
    "tail_order",
    "z_cross",
]

X_CROSS = 40.0
_SPLIT = 134217729.0  # 2**27 + 1


@dataclass(frozen=True)
class MLParams:
    """Parameter triple (alpha, beta, gamma) of the Prabhakar function.

    Restricted to ``0 < alpha <= 2``, ``beta > 0`` and ``gamma > 0``.
    """

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        a, b, g = (float(v) for v in (self.alpha, self.beta, self.gamma))
        if not (0.0 < a <= 2.0):
            raise DomainError(f"alpha must lie in (0, 2], got {a}")
        if not b > 0.0:
            raise DomainError(f"beta must be positive, got {b}")
        if not g > 0.0:
            raise DomainError(f"gamma must be positive, got {g}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        object.__setattr__(self, "gamma", g)

    def astuple(self) -> tuple[float, float, float]:
        return (self.alpha, self.beta, self.gamma)

    def __str__(self) -> str:
        return f"({self.alpha:g},{self.beta:g},{self.gamma:g})"


def z_cross(alpha: float) -> float:
    """Magnitude of the negative argument where the expansion takes over."""
    return X_CROSS ** alpha


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def _terminating(params: MLParams) -> bool:
    """alpha = 1 with beta - gamma a non-positive integer: E(-u) = exp(-u) * polynomial."""
    return params.alpha == 1.0 and _is_nonpositive_int(params.beta - params.gamma)


def tail_order(params: MLParams) -> float:
    """Exponent ``r`` with ``|E(-u)| = O(u**-r)`` as ``u -> inf``.

    This is ``gamma + k`` for the first non-vanishing term of the algebraic
    expansion, ``inf`` when the function decays exponentially, and for
    ``alpha = 2`` the smaller of that and the envelope ``(beta - gamma)/2`` of
    the oscillating part.
    """
    a, b, g = params.astuple()
    if _terminating(params):
        return math.inf
    order = math.inf
    for k in range(64):
        if not _is_nonpositive_int(b - a * (g + k)):
            order = g + k
            break
    if a == 2.0:
        order = min(order, 0.5 * (b - g))
    return order


# -- coefficient tables ----------------------------------------------------------


@dataclass(frozen=True)
class _Tables:
    taylor_hi: np.ndarray
    taylor_lo: np.ndarray
    taylor_logabs: np.ndarray
    alg_logc: np.ndarray
    alg_rgamma: np.ndarray
    alg_logenv: np.ndarray
    exp_q: np.ndarray | None
    exp_rgamma: np.ndarray | None
    exp_logenv: np.ndarray | None


def _series_log_exp(h: np.ndarray, power: float, shift_log: np.ndarray) -> np.ndarray:
    """Coefficients of exp(power*log(h(v)) + shift_log(v)) for h(0) = 1."""
    n = h.size
    hp = np.zeros(n)
    hp[:-1] = np.arange(1, n) * h[1:]
    lp = np.zeros(n)  # derivative of log h
    for j in range(n):
        lp[j] = hp[j] - np.dot(h[1:j + 1], lp[j - 1::-1][:j]) if j else hp[0]
    logh = np.zeros(n)
    logh[1:] = lp[:-1] / np.arange(1, n)
    total = power * logh + shift_log
    dp = np.zeros(n)
    dp[:-1] = np.arange(1, n) * total[1:]
    out = np.zeros(n)
    out[0] = math.exp(total[0])
    for j in range(1, n):
        out[j] = np.dot(dp[:j], out[j - 1::-1]) / j
    return out


def _envelope_rgamma(w: np.ndarray, rg: np.ndarray) -> np.ndarray:
    """Log of an envelope for |1/Gamma(w)|, smooth through its zeros."""
    with np.errstate(divide="ignore"):
        return np.where(w < 1.0, gammaln(1.0 - np.minimum(w, 0.999)) - math.log(math.pi),
                        np.log(np.abs(rg) + 1e-300))


@lru_cache(maxsize=128)
def _tables(alpha: float, beta: float, gamma: float) -> _Tables:
    # Taylor coefficients, enough to reach X_CROSS with 80 e-folds to spare
    log_u = math.log(z_cross(alpha))
    n_max = 10000
    n = np.arange(n_max, dtype=float)
    logabs = gammaln(gamma + n) - gammaln(gamma) - gammaln(n + 1) - gammaln(alpha * n + beta)
    run = logabs + n * log_u
    peak = np.maximum.accumulate(run)
    stop = np.nonzero((run < peak - 80.0) & (n > 20))[0]
    count = int(stop[0]) + 1 if stop.size else n_max
    hi = np.empty(count)
    lo = np.empty(count)
    with mp.workdps(40):
        A, B, G = mp.mpf(alpha), mp.mpf(beta), mp.mpf(gamma)
        c = mp.mpf(1)
        for j in range(count):
            v = c * mp.rgamma(A * j + B)
            hi[j] = float(v)
            lo[j] = float(v - hi[j])
            c = c * (G + j) / (j + 1)

    # algebraic expansion
    k_count = int(1.3 * X_CROSS / alpha) + 20
    k = np.arange(k_count, dtype=float)
    logc = gammaln(gamma + k) - gammaln(gamma) - gammaln(k + 1)
    w = beta - alpha * (gamma + k)
    rg = rgamma(w)
    alg_env = logc + _envelope_rgamma(w, rg)

    exp_q = exp_rg = exp_env = None
    if alpha > 1.0:
        q_count = 100
        h = np.array([binom(alpha, j + 1) / alpha for j in range(q_count)])
        j = np.arange(q_count, dtype=float)
        log1pv = np.zeros(q_count)
        log1pv[1:] = (-1.0) ** (j[1:] + 1) / j[1:]
        exp_q = _series_log_exp(h, -gamma, (alpha * gamma - beta) * log1pv)
        exp_rg = rgamma(gamma - j)
        with np.errstate(divide="ignore"):
            exp_env = np.log(np.abs(exp_q) + 1e-300) + _envelope_rgamma(gamma - j, exp_rg)
    return _Tables(hi, lo, logabs[:count], logc, rg, alg_env, exp_q, exp_rg, exp_env)


def _tables_for(params: MLParams) -> _Tables:
    return _tables(*params.astuple())


# -- double-double Horner -------------------------------------------------------


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    t = _SPLIT * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLIT * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _taylor_dd(tab: _Tables, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sum c_n x**n in double-double; returns values and a rounding/truncation bound."""
    xmax = float(np.max(np.abs(x)))
    run = tab.taylor_logabs + np.arange(tab.taylor_logabs.size) * math.log(max(xmax, 1e-300))
    keep = np.nonzero(run > run.max() - 80.0)[0]
    count = max(int(keep[-1]) + 1, 2) if keep.size else 2
    hi_c = tab.taylor_hi[:count]
    lo_c = tab.taylor_lo[:count]
    hi = np.full_like(x, hi_c[-1])
    lo = np.full_like(x, lo_c[-1])
    ax = np.abs(x)
    mag = np.full_like(x, abs(hi_c[-1]))
    for j in range(count - 2, -1, -1):
        p, e = _two_prod(hi, x)
        e = e + lo * x
        p, e = _two_sum(p, e)
        s, f = _two_sum(p, hi_c[j])
        f = f + e + lo_c[j]
        hi, lo = _two_sum(s, f)
        mag = mag * ax + abs(hi_c[j])
    err = 4.0 * count * 2.0 ** -104 * mag + np.abs(hi_c[-1] * ax ** (count - 1))
    return hi + lo, err


# -- large-argument expansions ------------------------------------------------------


def _algebraic(params: MLParams, tab: _Tables, u: np.ndarray, terms: int | None = None):
    """Optimally truncated algebraic expansion of E(-u)."""
    g = params.gamma
    k = np.arange(tab.alg_logc.size, dtype=float)
    logu = np.log(u)[None, :]
    env = tab.alg_logenv[:, None] - (g + k)[:, None] * logu
    kopt = np.argmin(env, axis=0)
    if terms is not None:
        kopt = np.minimum(kopt, terms + 1)
    mask = k[:, None] < kopt[None, :]
    with np.errstate(over="ignore", under="ignore"):
        mags = np.exp(tab.alg_logc[:, None] - (g + k)[:, None] * logu)
    sign = np.where(k % 2 == 0, 1.0, -1.0)[:, None]
    vals = np.sum(np.where(mask, sign * mags * tab.alg_rgamma[:, None], 0.0), axis=0)
    cols = np.arange(u.size)
    err = np.exp(env[kopt, cols])
    return vals, err, kopt


def _exponential(params: MLParams, tab: _Tables, u: np.ndarray):
    """Contribution of the singularities s = u**(1/alpha) exp(+-i pi/alpha), alpha > 1."""
    a, b, g = params.astuple()
    x = u ** (1.0 / a)
    # exact direction at alpha = 2, where cos(pi/2) would otherwise leak exp(6e-17 x)
    direction = 1j if a == 2.0 else cmath.exp(1j * math.pi / a)
    s = x * direction
    k = np.arange(tab.exp_q.size, dtype=float)
    env = tab.exp_logenv[:, None] - k[:, None] * np.log(x)[None, :]
    if float(g).is_integer():
        kopt = np.full(u.size, int(g))
        tail = np.zeros(u.size)
    else:
        kopt = np.argmin(env[1:], axis=0) + 1
        tail = np.exp(env[kopt, np.arange(u.size)])
    mask = k[:, None] < kopt[None, :]
    log_s = np.log(s)
    with np.errstate(under="ignore"):
        terms = tab.exp_q[:, None] * np.exp(-k[:, None] * log_s[None, :]) * tab.exp_rgamma[:, None]
        pre = a ** (-g) * np.exp(s + (g - b) * log_s)
    series = np.sum(np.where(mask, terms, 0.0), axis=0)
    vals = 2.0 * (pre * series).real
    err = 2.0 * np.abs(pre) * tail
    return vals, err


def _kummer_unit_alpha(params: MLParams, u: np.ndarray):
    """E(1, beta, gamma; -u) = exp(-u) sum (beta-gamma)_n u**n / (Gamma(beta+n) n!)."""
    b, g = params.beta, params.gamma
    d = b - g
    if _is_nonpositive_int(d):
        count = int(round(-d)) + 1
    else:
        count = int(np.max(u) + 12.0 * math.sqrt(np.max(u)) + 40)
    n = np.arange(count - 1, dtype=float)[:, None]
    ratios = (d + n) * u[None, :] / ((b + n) * (n + 1.0))
    start = np.exp(-u) * rgamma(b)
    terms = np.vstack([np.ones((1, u.size)), np.cumprod(ratios, axis=0)]) * start
    vals = np.sum(terms, axis=0)
    err = 8.0 * count * np.finfo(float).eps * np.sum(np.abs(terms), axis=0)
    return vals, err


def _exponential_bound(params: MLParams, u: np.ndarray) -> np.ndarray:
    """Bound on the exp(-u) part that the algebraic expansion omits when alpha = 1."""
    log_mag = -u + abs(params.gamma - params.beta) * np.log(np.maximum(u, 1.0))
    return 2.0 * np.exp(log_mag) * abs(float(rgamma(params.gamma)))


def _negative(params: MLParams, u: np.ndarray):
    """Values and error bounds of E(-u) for an array u >= 0."""
    u = np.asarray(u, dtype=float)
    flat = u.ravel()
    vals = np.empty_like(flat)
    errs = np.zeros_like(flat)
    a, b = params.alpha, params.beta
    tab = _tables_for(params) if a != 1.0 else None

    zero = flat == 0.0
    vals[zero] = rgamma(b)
    inf = np.isinf(flat)
    vals[inf] = 0.0 if a < 2.0 else math.nan
    rest = ~(zero | inf)

    cross = z_cross(a)
    if a == 1.0:
        if _terminating(params):
            near, far = rest, np.zeros_like(rest)
        else:
            near, far = rest & (flat < cross), rest & (flat >= cross)
        if near.any():
            vals[near], errs[near] = _kummer_unit_alpha(params, flat[near])
        if far.any():
            v, e, _ = _algebraic(params, _tables_for(params), flat[far])
            vals[far] = v
            errs[far] = e + _exponential_bound(params, flat[far])
    else:
        near, far = rest & (flat < cross), rest & (flat >= cross)
        if near.any():
            vals[near], errs[near] = _taylor_dd(tab, -flat[near])
        if far.any():
            v, e, _ = _algebraic(params, tab, flat[far])
            if a > 1.0:
                v2, e2 = _exponential(params, tab, flat[far])
                v = v + v2
                e = e + e2
            vals[far] = v
            errs[far] = e
    return vals.reshape(u.shape), errs.reshape(u.shape)


def ml3_negative(params: MLParams, u) -> np.ndarray:
    """Vectorized ``E(alpha, beta, gamma; -u)`` for ``u >= 0`` (``inf`` allowed).

    This is the kernel evaluator used by every integral in the package.
    """
    return _negative(params, np.asarray(u, dtype=float))[0]


# -- public scalar API ------------------------------------------------------------------


def _positive_series(params: MLParams, z: float, max_terms: int) -> Estimate:
    a, b, g = params.astuple()
    state = {"n": 0, "c": float(rgamma(b))}

    def term(n: int) -> float:
        # coefficients are advanced by recurrence; n arrives in order
        while state["n"] < n:
            m = state["n"]
            with np.errstate(over="ignore", invalid="ignore"):
                state["c"] *= (g + m) / (m + 1.0) * z / poch(a * m + b, a)
            state["n"] += 1
        return state["c"]

    return sum_series(term, rel_tol=1e-17, max_terms=max_terms)


def ml3_series(params: MLParams, z: float, max_terms: int = 10000, *,
               extended: bool = False) -> Estimate:
    """Plain Taylor summation of the Prabhakar series, whatever ``|z|``.

    In double precision this is only trustworthy for moderate negative ``z``;
    it exists as an oracle and to expose the cancellation regime.  With
    ``extended=True`` the series is summed in multiprecision with enough
    guard digits to absorb the cancellation.
    """
    z = float(z)
    if z == 0.0:
        return Estimate(float(rgamma(params.beta)), 0.0, 1, True)
    if not extended:
        return _positive_series(params, z, max_terms)
    a, b, g = params.astuple()
    x = abs(z) ** (1.0 / a)
    dps = int(x * 0.4343) + 30
    with mp.workdps(dps):
        A, B, G, Z = mp.mpf(a), mp.mpf(b), mp.mpf(g), mp.mpf(z)
        total = mp.mpf(0)
        c = mp.mpf(1)
        power = mp.mpf(1)
        biggest = mp.mpf(0)
        quiet = 0
        last = mp.mpf(0)
        for n in range(max_terms):
            t = c * power * mp.rgamma(A * n + B)
            total += t
            biggest = max(biggest, abs(t))
            last = abs(t)
            if n > 3 and last <= mp.mpf(10) ** (-dps + 8) * biggest:
                quiet += 1
                if quiet == 3:
                    return Estimate(float(total), float(last) + abs(float(total)) * 1e-17,
                                    n + 1, True)
            else:
                quiet = 0
            c = c * (G + n) / (n + 1)
            power *= Z
        return Estimate(float(total), float(last), max_terms, False)


def ml3_asymptotic(params: MLParams, u: float, terms: int | None = None) -> Estimate:
    """Large-argument expansion of ``E(alpha, beta, gamma; -u)``.

    The algebraic part is

        sum_k (-1)**k (gamma)_k u**-(gamma+k) / (k! Gamma(beta - alpha*(gamma+k)))

    truncated at its smallest term (or after ``terms + 1`` terms).  For
    ``1 < alpha < 2`` the exponentially small part from the complex
    singularities is added.  When ``alpha = 1`` the omitted ``exp(-u)`` part
    is folded into the error estimate.
    """
    a = params.alpha
    if a >= 2.0:
        raise DomainError("the large-argument expansion needs alpha < 2")
    if u < z_cross(a):
        raise DomainError(f"u={u} lies below the crossover {z_cross(a):.6g}")
    tab = _tables_for(params)
    uu = np.array([float(u)])
    vals, errs, kopt = _algebraic(params, tab, uu, terms)
    if 1.0 < a < 2.0:
        v2, e2 = _exponential(params, tab, uu)
        vals, errs = vals + v2, errs + e2
    if a == 1.0:
        errs = errs + _exponential_bound(params, uu)
    return Estimate(float(vals[0]), float(errs[0]), int(kopt[0]), True)


def ml3(params: MLParams, z: float) -> Estimate:
    """``E(alpha, beta, gamma; z)`` for real ``z``.

    Positive arguments sum the Taylor series: in double-double arithmetic over
    the cached coefficient table up to ``z_cross(alpha)``, in multiprecision
    beyond it.  Negative arguments
    go through the regime selection described in the module docstring; beyond
    ``z_cross(alpha)`` this is the large-argument expansion.
    """
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("argument must be finite")
    if z == 0.0:
        return ml3_series(params, z)
    if z > 0.0:
        if z > z_cross(params.alpha):
            # positive terms, no cancellation; multiprecision only guards the coefficients
            return ml3_series(params, z, extended=True)
        vals, errs = _taylor_dd(_tables_for(params), np.array([z]))
        return Estimate(float(vals[0]), float(errs[0]), 1, bool(np.isfinite(vals[0])))
    vals, errs = _negative(params, np.array([-z]))
    v, e = float(vals[0]), float(errs[0])
    ok = math.isfinite(v) and e <= 1e-6 * abs(v) + 1e-300
    return Estimate(v, e, 1, ok)
