"""Numerical checks for the identities satisfied by the generalized functions.

Each :class:`IdentityId` maps to a routine that evaluates both sides by
independent paths (different integral forms, series against quadrature, closed
forms against nested quadrature) and returns a :class:`CheckReport`.
:func:`run_suite` executes a plan of such checks; :func:`default_plan` is the
shipped plan covering the whole catalog.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from . import classical as cl
from .errors import DomainError, NonConvergenceError
from .gamma_beta import (
    Affine,
    beta_mellin_quadrature,
    mellin_beta_rhs,
    ml_beta_p,
    ml_beta_p_many,
    ml_gamma_p,
    ml_gamma_product_polar,
)
from .hypergeometric import (
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
from .mittag_leffler import MLParams
from .reports import CheckReport, EvalPoint, IdentityId, Status, compare, skipped

__all__ = [
    "DEFAULT_TOLERANCES",
    "PlanEntry",
    "SuiteReport",
    "check_identity",
    "default_plan",
    "run_suite",
]

I = IdentityId

DEFAULT_TOLERANCES: dict[IdentityId, float] = {
    I.THM1_PRODUCT: 1e-4,
    I.THM2_SUMMATION: 1e-3,
    I.THM3_FUNCTIONAL: 1e-8,
    I.THM4_SUMMATION: 1e-3,
    I.THM5_REPRESENTATIONS: 1e-7,
    I.THM6_MELLIN_BETA: 1e-3,
    I.GHF_SERIES_VS_INTEGRAL: 1e-6,
    I.CHF_SERIES_VS_INTEGRAL: 1e-6,
    I.DIFF_GHF: 1e-4,
    I.DIFF_CHF: 1e-4,
    I.MELLIN_GHF: 1e-3,
    I.MELLIN_CHF: 1e-3,
    I.PFAFF: 1e-7,
    I.REMARK_TRANSFORM_1: 1e-7,
    I.REMARK_TRANSFORM_2: 1e-7,
    I.KUMMER: 1e-7,
    I.RECURRENCE_DELTA_A: 1e-7,
    I.VALUE_AT_ONE: 1e-6,
    I.REDUCTION_CHAUDHRY: 1e-8,
    I.REDUCTION_CLASSICAL: 1e-8,
}

SUMMATION_TERMS = 500
FD_STEP = 1e-4
FD_RTOL = 1e-13
EXPONENTIAL = MLParams(1.0, 1.0, 1.0)


# -- individual checks ------------------------------------------------------------------------

def _thm1(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, x, y = pt.require("params", "p", "x", "y")
    gx = ml_gamma_p(x, p, params)
    gy = ml_gamma_p(y, p, params)
    polar = ml_gamma_product_polar(x, y, p, params, rel_tol=min(1e-6, 0.01 * tol))
    cost = gx.evaluations + gy.evaluations + polar.evaluations
    return compare(I.THM1_PRODUCT, pt, gx.value * gy.value, polar.value, tol, cost=cost)


def _tail_estimate(terms: np.ndarray) -> tuple[float, float]:
    """Integral-comparison bound for the omitted tail and the fitted decay exponent.

    Terms are modelled as ``T_n ~ C n**q`` from the last half of the sum; the
    tail beyond ``N`` is then ``|T_N| N / (-q - 1)``.
    """
    n_last = terms.size - 1
    t_last = abs(terms[-1])
    t_mid = abs(terms[n_last // 2])
    if t_last == 0.0:
        return 0.0, -math.inf
    q = math.log(t_last / t_mid) / math.log(n_last / (n_last // 2))
    if not q < -1.0:
        raise DomainError(f"summation terms decay like n**{q:.3g}; the series is not summable")
    return t_last * n_last / (-q - 1.0), q


def _thm2(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, x, y = pt.require("params", "p", "x", "y")
    big_n = pt.n if pt.n is not None else SUMMATION_TERMS
    target = ml_beta_p(x, 1.0 - y, p, params)
    n = np.arange(big_n + 1, dtype=float)
    weights = np.concatenate([[1.0], np.cumprod((y + n[:-1]) / (n[:-1] + 1.0))])
    coeffs = ml_beta_p_many(x + n, 1.0, p, params, rel_tol=1e-10)
    terms = weights * coeffs.values
    tail, q = _tail_estimate(terms)
    partial = math.fsum(terms)
    note = f"N={big_n}; term decay n**{q:.3g}; tail estimate {tail:.3e}"
    return compare(I.THM2_SUMMATION, pt, partial, target.value, tol,
                   cost=target.evaluations + coeffs.evaluations, note=note, allowance=3.0 * tail)


def _completely_monotone(params: MLParams) -> bool:
    """Sufficient condition for E(-u) to be completely monotone (hence positive)."""
    a, b, g = params.astuple()
    return a <= 1.0 and 0.0 < a * g <= b <= 1.0


def _thm4(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, x, y = pt.require("params", "p", "x", "y")
    big_n = pt.n if pt.n is not None else SUMMATION_TERMS
    target = ml_beta_p(x, y, p, params)
    n = np.arange(big_n + 1, dtype=float)
    coeffs = ml_beta_p_many(x + n, y + 1.0, p, params, rel_tol=1e-10)
    terms = coeffs.values
    tail, q = _tail_estimate(terms)
    partials = np.cumsum(terms)
    monotone = bool(np.all(np.diff(partials) >= 0.0))
    note = (f"N={big_n}; term decay n**{q:.3g}; tail estimate {tail:.3e}; "
            f"partial sums {'monotone' if monotone else 'not monotone'}")
    report = compare(I.THM4_SUMMATION, pt, math.fsum(terms), target.value, tol,
                     cost=target.evaluations + coeffs.evaluations, note=note,
                     allowance=3.0 * tail)
    if _completely_monotone(params) and not monotone:
        report = _with_status(report, Status.FAIL)
    return report


def _with_status(report: CheckReport, status: Status) -> CheckReport:
    return replace(report, status=status)


def _thm3(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, x, y = pt.require("params", "p", "x", "y")
    lhs = ml_beta_p(x, y, p, params)
    right_y = ml_beta_p(x, y + 1.0, p, params)
    right_x = ml_beta_p(x + 1.0, y, p, params)
    cost = lhs.evaluations + right_y.evaluations + right_x.evaluations
    return compare(I.THM3_FUNCTIONAL, pt, lhs.value, right_y.value + right_x.value, tol, cost=cost)


THM5_REPS = ("unit", "trig", "semi-infinite", "symmetric", Affine(-1.5, 2.0))


def _thm5(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, x, y = pt.require("params", "p", "x", "y")
    ests = [ml_beta_p(x, y, p, params, rep) for rep in THM5_REPS]
    values = [e.value for e in ests]
    lo, hi = int(np.argmin(values)), int(np.argmax(values))
    names = [r if isinstance(r, str) else f"affine({r.lo:g},{r.hi:g})" for r in THM5_REPS]
    note = f"widest pair: {names[lo]} vs {names[hi]}"
    return compare(I.THM5_REPRESENTATIONS, pt, values[lo], values[hi], tol,
                   cost=sum(e.evaluations for e in ests), note=note)


def _thm6(pt: EvalPoint, tol: float) -> CheckReport:
    params, x, y, s = pt.require("params", "x", "y", "s")
    rhs = mellin_beta_rhs(x, y, s, params)
    lhs = beta_mellin_quadrature(x, y, s, params, rel_tol=min(1e-5, 0.01 * tol))
    return compare(I.THM6_MELLIN_BETA, pt, lhs.value, rhs, tol, cost=lhs.evaluations,
                   note=f"requires 0 < s < gamma; s={s:g}, gamma={params.gamma:g}")


def _ghf_series(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, a, b, c, z = pt.require("params", "p", "a", "b", "c", "z")
    series = ml_2f1(a, b, c, z, p, params, "series")
    integral = ml_2f1(a, b, c, z, p, params, "unit")
    return compare(I.GHF_SERIES_VS_INTEGRAL, pt, series.value, integral.value, tol,
                   cost=series.evaluations + integral.evaluations)


def _chf_series(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, b, c, z = pt.require("params", "p", "b", "c", "z")
    series = ml_1f1(b, c, z, p, params, "series")
    integral = ml_1f1(b, c, z, p, params, "direct")
    return compare(I.CHF_SERIES_VS_INTEGRAL, pt, series.value, integral.value, tol,
                   cost=series.evaluations + integral.evaluations)


def _central_difference(values: np.ndarray, order: int, h: float) -> float:
    fm, f0, fp = values
    if order == 1:
        return (fp - fm) / (2.0 * h)
    if order == 2:
        return (fp - 2.0 * f0 + fm) / (h * h)
    raise DomainError("finite-difference check supports n = 1 and n = 2")


def _diff_ghf(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, a, b, c, z = pt.require("params", "p", "a", "b", "c", "z")
    order = pt.n if pt.n is not None else 1
    lhs = ml_2f1_nth_derivative(order, a, b, c, z, p, params)
    grid = z + FD_STEP * np.array([-1.0, 0.0, 1.0])
    rhs = _central_difference(ml_2f1_unit_many(a, b, c, grid, p, params, rel_tol=FD_RTOL),
                              order, FD_STEP)
    return compare(I.DIFF_GHF, pt, lhs.value, rhs, tol, cost=lhs.evaluations,
                   note=f"central difference, h={FD_STEP:g}")


def _diff_chf(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, b, c, z = pt.require("params", "p", "b", "c", "z")
    order = pt.n if pt.n is not None else 1
    lhs = ml_1f1_nth_derivative(order, b, c, z, p, params)
    grid = z + FD_STEP * np.array([-1.0, 0.0, 1.0])
    rhs = _central_difference(ml_1f1_many(b, c, grid, p, params, rel_tol=FD_RTOL), order, FD_STEP)
    return compare(I.DIFF_CHF, pt, lhs.value, rhs, tol, cost=lhs.evaluations,
                   note=f"central difference, h={FD_STEP:g}")


def _mellin_ghf(pt: EvalPoint, tol: float) -> CheckReport:
    params, a, b, c, z, s = pt.require("params", "a", "b", "c", "z", "s")
    rhs = ghf_mellin_rhs(a, b, c, z, s, params)
    lhs = ghf_mellin_quadrature(a, b, c, z, s, params, rel_tol=min(1e-5, 0.01 * tol))
    return compare(I.MELLIN_GHF, pt, lhs.value, rhs, tol, cost=lhs.evaluations,
                   note=f"requires 0 < s < gamma; s={s:g}, gamma={params.gamma:g}")


def _mellin_chf(pt: EvalPoint, tol: float) -> CheckReport:
    params, b, c, z, s = pt.require("params", "b", "c", "z", "s")
    rhs = chf_mellin_rhs(b, c, z, s, params)
    lhs = chf_mellin_quadrature(b, c, z, s, params, rel_tol=min(1e-5, 0.01 * tol))
    return compare(I.MELLIN_CHF, pt, lhs.value, rhs, tol, cost=lhs.evaluations,
                   note=f"requires 0 < s < gamma; s={s:g}, gamma={params.gamma:g}")


def _pfaff(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, a, b, c, z = pt.require("params", "p", "a", "b", "c", "z")
    lhs = ml_2f1(a, b, c, z, p, params)
    rhs = pfaff_transform_rhs(a, b, c, z, p, params)
    note = "third parameter c"
    if p == 0:
        diag = pfaff_printed_reading_diagnostic(a, b, c, z)
        note += (f"; classical check: reading c rel diff {diag.rel_diff_c:.2e}, "
                 f"reading b rel diff {diag.rel_diff_b:.2e}")
    return compare(I.PFAFF, pt, lhs.value, rhs.value, tol,
                   cost=lhs.evaluations + rhs.evaluations, note=note)


def _remark1(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, a, b, c, z = pt.require("params", "p", "a", "b", "c", "z")
    if not z > 0:
        raise DomainError("needs z > 0")
    lhs = ml_2f1(a, b, c, 1.0 - 1.0 / z, p, params)
    rhs = transform_one_minus_inv_z(a, b, c, z, p, params)
    return compare(I.REMARK_TRANSFORM_1, pt, lhs.value, rhs.value, tol,
                   cost=lhs.evaluations + rhs.evaluations)


def _remark2(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, a, b, c, z = pt.require("params", "p", "a", "b", "c", "z")
    if not z > -1:
        raise DomainError("needs z > -1")
    lhs = ml_2f1(a, b, c, z / (1.0 + z), p, params)
    rhs = transform_z_over_one_plus_z(a, b, c, z, p, params)
    return compare(I.REMARK_TRANSFORM_2, pt, lhs.value, rhs.value, tol,
                   cost=lhs.evaluations + rhs.evaluations, note="argument -z on the right")


def _kummer(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, b, c, z = pt.require("params", "p", "b", "c", "z")
    lhs = ml_1f1(b, c, z, p, params)
    rhs = kummer_transform_rhs(b, c, z, p, params)
    return compare(I.KUMMER, pt, lhs.value, rhs.value, tol, cost=lhs.evaluations + rhs.evaluations)


def _recurrence(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, a, b, c, z = pt.require("params", "p", "a", "b", "c", "z")
    report = recurrence_residual(a, b, c, z, p, params, tolerance=tol)
    return replace(report, point=pt)


def _value_at_one(pt: EvalPoint, tol: float) -> CheckReport:
    params, p, a, b, c = pt.require("params", "p", "a", "b", "c")
    lhs = ml_2f1_at_one(a, b, c, p, params, rep="trig")
    rhs = ml_2f1(a, b, c, 1.0, p, params, "unit")
    return compare(I.VALUE_AT_ONE, pt, lhs.value, rhs.value, tol,
                   cost=lhs.evaluations + rhs.evaluations)


def _function(pt: EvalPoint) -> str:
    if pt.function is None:
        raise KeyError("function")
    name = pt.function.lower()
    if name not in ("beta", "gamma", "2f1", "1f1"):
        raise DomainError(f"unknown function {pt.function!r} for a reduction check")
    return name


def _reduction_chaudhry(pt: EvalPoint, tol: float) -> CheckReport:
    name = _function(pt)
    params = pt.params or EXPONENTIAL
    if params != EXPONENTIAL:
        raise DomainError("the exp-kernel reduction needs (alpha, beta, gamma) = (1, 1, 1)")
    (p,) = pt.require("p")
    if name == "beta":
        x, y = pt.require("x", "y")
        lhs, rhs = ml_beta_p(x, y, p, params), cl.chaudhry_beta_p(x, y, p)
    elif name == "gamma":
        (x,) = pt.require("x")
        lhs, rhs = ml_gamma_p(x, p, params), cl.chaudhry_gamma_p(x, p)
    elif name == "2f1":
        a, b, c, z = pt.require("a", "b", "c", "z")
        lhs, rhs = ml_2f1(a, b, c, z, p, params), cl.chaudhry_2f1(a, b, c, z, p)
    else:
        b, c, z = pt.require("b", "c", "z")
        lhs, rhs = ml_1f1(b, c, z, p, params), cl.chaudhry_1f1(b, c, z, p)
    return compare(I.REDUCTION_CHAUDHRY, pt, lhs.value, rhs.value, tol,
                   cost=lhs.evaluations + rhs.evaluations, note=name)


def _reduction_classical(pt: EvalPoint, tol: float) -> CheckReport:
    name = _function(pt)
    params = pt.params or EXPONENTIAL
    p = pt.p if pt.p is not None else 0.0
    if p != 0:
        raise DomainError("the classical reduction is taken at p = 0")
    if name == "beta":
        x, y = pt.require("x", "y")
        lhs, rhs = ml_beta_p(x, y, 0.0, params).value, cl.beta_fn(x, y)
    elif name == "gamma":
        (x,) = pt.require("x")
        lhs, rhs = ml_gamma_p(x, 0.0, params).value, cl.gamma_fn(x)
    elif name == "2f1":
        a, b, c, z = pt.require("a", "b", "c", "z")
        lhs, rhs = ml_2f1(a, b, c, z, 0.0, params).value, cl.gauss_2f1((a, b, c), z).value
    else:
        b, c, z = pt.require("b", "c", "z")
        lhs, rhs = ml_1f1(b, c, z, 0.0, params).value, cl.kummer_1f1(b, c, z).value
    return compare(I.REDUCTION_CLASSICAL, pt, lhs, rhs, tol, note=name)


_CHECKS: dict[IdentityId, Callable[[EvalPoint, float], CheckReport]] = {
    I.THM1_PRODUCT: _thm1,
    I.THM2_SUMMATION: _thm2,
    I.THM3_FUNCTIONAL: _thm3,
    I.THM4_SUMMATION: _thm4,
    I.THM5_REPRESENTATIONS: _thm5,
    I.THM6_MELLIN_BETA: _thm6,
    I.GHF_SERIES_VS_INTEGRAL: _ghf_series,
    I.CHF_SERIES_VS_INTEGRAL: _chf_series,
    I.DIFF_GHF: _diff_ghf,
    I.DIFF_CHF: _diff_chf,
    I.MELLIN_GHF: _mellin_ghf,
    I.MELLIN_CHF: _mellin_chf,
    I.PFAFF: _pfaff,
    I.REMARK_TRANSFORM_1: _remark1,
    I.REMARK_TRANSFORM_2: _remark2,
    I.KUMMER: _kummer,
    I.RECURRENCE_DELTA_A: _recurrence,
    I.VALUE_AT_ONE: _value_at_one,
    I.REDUCTION_CHAUDHRY: _reduction_chaudhry,
    I.REDUCTION_CLASSICAL: _reduction_classical,
}




def check_identity(identity: IdentityId | str, point: EvalPoint,
                   tolerance: float | None = None) -> CheckReport:
    """Evaluate one identity at one point.

    Out-of-domain points and points missing a required field come back as
    skipped reports; they are never counted as passes.
    """
    identity = IdentityId(identity)
    tol = DEFAULT_TOLERANCES[identity] if tolerance is None else float(tolerance)
    try:
        return _CHECKS[identity](point, tol)
    except KeyError as exc:
        return skipped(identity, point, tol, f"missing field {exc.args[0]!r}")
    except DomainError as exc:
        return skipped(identity, point, tol, f"out of domain: {exc}")
    except NonConvergenceError as exc:
        nan = math.nan
        return CheckReport(identity, point, nan, nan, nan, nan, tol, Status.FAIL, 0, str(exc))


# -- suites ----------------------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanEntry:
    identity: IdentityId
    points: tuple[EvalPoint, ...]
    tolerance: float | None = None


@dataclass
class SuiteReport:
    """Aggregated outcome of a plan, in plan order."""

    identities: list[IdentityId]
    reports: list[CheckReport] = field(default_factory=list)

    def for_identity(self, identity: IdentityId) -> list[CheckReport]:
        return [r for r in self.reports if r.identity == identity]

    def identity_status(self, identity: IdentityId) -> Status:
        reports = self.for_identity(identity)
        if not reports or all(r.status is Status.SKIP for r in reports):
            return Status.SKIP
        if any(r.status is Status.FAIL for r in reports):
            return Status.FAIL
        if any(r.status is Status.SKIP for r in reports):
            return Status.SKIP
        return Status.PASS

    def counts(self) -> dict[str, int]:
        out = {str(s): 0 for s in Status}
        for r in self.reports:
            out[str(r.status)] += 1
        return out

    @property
    def status(self) -> Status:
        states = [self.identity_status(i) for i in self.identities]
        if any(s is Status.FAIL for s in states):
            return Status.FAIL
        if any(s is Status.SKIP for s in states):
            return Status.SKIP
        return Status.PASS

    def exit_code(self) -> int:
        return {Status.PASS: 0, Status.SKIP: 4, Status.FAIL: 5}[self.status]

    def worst(self, identity: IdentityId) -> float | None:
        diffs = [r.rel_diff for r in self.for_identity(identity) if r.status is not Status.SKIP]
        return max(diffs) if diffs else None

    @property
    def total_cost(self) -> int:
        return sum(r.cost for r in self.reports)

    def as_dict(self) -> dict:
        summary = []
        for ident in self.identities:
            worst = self.worst(ident)
            summary.append({
                "identity": str(ident),
                "status": str(self.identity_status(ident)),
                "checks": len(self.for_identity(ident)),
                "worst_rel_diff": worst if worst is None or math.isfinite(worst) else None,
            })
        return {
            "status": str(self.status),
            "counts": self.counts(),
            "total_cost": self.total_cost,
            "identities": summary,
            "checks": [r.as_dict() for r in self.reports],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False) + "\n"

    def to_markdown(self) -> str:
        lines = ["| identity | status | point | lhs | rhs | rel_diff | tolerance |",
                 "|---|---|---|---|---|---|---|"]
        for r in self.reports:
            point = ", ".join(f"{k}={v:g}" if isinstance(v, (int, float)) else f"{k}={v}"
                              for k, v in r.point.as_dict().items())
            lines.append(f"| {r.identity} | {r.status} | {point} | {r.lhs:.12g} | {r.rhs:.12g} "
                         f"| {r.rel_diff:.3g} | {r.tolerance:g} |")
        for ident in self.identities:
            if not self.for_identity(ident):
                lines.append(f"| {ident} | skip | (no points) | | | | |")
        counts = self.counts()
        lines.append("")
        lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped; "
                     f"overall {self.status}")
        return "\n".join(lines) + "\n"


def run_suite(plan: Sequence[PlanEntry], *, fail_fast: bool = False,
              progress: Callable[[CheckReport], None] | None = None) -> SuiteReport:
    """Run every check of ``plan`` in order.

    An entry with no points is reported as a skipped identity.  With
    ``fail_fast`` the run stops after the first failing check.
    """
    if not plan:
        raise ValueError("plan is empty")
    suite = SuiteReport(identities=[])
    for entry in plan:
        ident = IdentityId(entry.identity)
        if ident not in suite.identities:
            suite.identities.append(ident)
        for point in entry.points:
            report = check_identity(ident, point, entry.tolerance)
            suite.reports.append(report)
            if progress is not None:
                progress(report)
            if fail_fast and report.status is Status.FAIL:
                return suite
    return suite


# -- shipped plan -------------------------------------------------------------------------------------


def _pt(alpha=None, beta=None, gamma=None, **fields) -> EvalPoint:
    params = MLParams(alpha, beta, gamma) if alpha is not None else None
    return EvalPoint(params=params, **fields)


def default_plan() -> list[PlanEntry]:
    """The shipped plan: every identity at four or more in-domain points."""
    exp = dict(alpha=1, beta=1, gamma=1)
    ml = dict(alpha=0.7, beta=1.3, gamma=2)
    hi = dict(alpha=1.5, beta=1, gamma=1)
    return [
        PlanEntry(I.THM1_PRODUCT, (
            _pt(**exp, x=1, y=1, p=0),
            _pt(**exp, x=1.3, y=0.8, p=0.5),
            _pt(**ml, x=0.7, y=1.2, p=0.3),
            _pt(alpha=0.5, beta=1, gamma=3, x=1.2, y=1.5, p=0.2),
        )),
        PlanEntry(I.THM2_SUMMATION, (
            _pt(**exp, x=1.5, y=0.5, p=0.5),
            _pt(**ml, x=1.2, y=0.3, p=1),
            _pt(alpha=0.5, beta=1, gamma=1, x=2, y=0.7, p=0.2),
            _pt(**hi, x=1.3, y=0.4, p=0.8),
        )),
        PlanEntry(I.THM3_FUNCTIONAL, (
            _pt(**exp, x=1.3, y=2.1, p=0.2),
            _pt(**ml, x=1.3, y=2.1, p=0.5),
            _pt(**hi, x=0.5, y=0.5, p=1),
            _pt(**ml, x=0.5, y=0.5, p=0.2),
        )),
        PlanEntry(I.THM4_SUMMATION, (
            _pt(**exp, x=1.5, y=0.5, p=0.5),
            _pt(alpha=0.5, beta=1, gamma=1, x=1.2, y=1.1, p=0.3),
            _pt(alpha=0.8, beta=0.9, gamma=1.1, x=0.8, y=0.6, p=1),
            _pt(alpha=0.6, beta=1, gamma=1.5, x=2, y=0.4, p=0.2),
        )),
        PlanEntry(I.THM5_REPRESENTATIONS, (
            _pt(**ml, x=1.5, y=2.5, p=1),
            _pt(**exp, x=2, y=3, p=0),
            _pt(**hi, x=0.5, y=0.5, p=0.2),
            _pt(alpha=0.5, beta=1, gamma=2, x=1.3, y=2.1, p=0.7),
            _pt(**exp, x=0.8, y=1.7, p=5),
            _pt(alpha=0.9, beta=0.6, gamma=0.5, x=1.1, y=0.9, p=0.4),
        )),
        PlanEntry(I.THM6_MELLIN_BETA, (
            _pt(**exp, x=1, y=1, s=0.5),
            _pt(**ml, x=2, y=3, s=0.5),
            _pt(**ml, x=1.3, y=2.1, s=1.2),
            _pt(**hi, x=1.5, y=0.5, s=0.5),
        )),
        PlanEntry(I.GHF_SERIES_VS_INTEGRAL, (
            _pt(**exp, a=0.5, b=1, c=2.5, z=-0.5, p=0),
            _pt(**exp, a=0.5, b=1, c=2.5, z=0.7, p=0.5),
            _pt(**ml, a=0.5, b=1, c=2.5, z=0.3, p=0.5),
            _pt(**ml, a=1.5, b=1.2, c=3.1, z=0.7, p=0),
        )),
        PlanEntry(I.CHF_SERIES_VS_INTEGRAL, (
            _pt(**exp, b=1, c=2.5, z=-2, p=0),
            _pt(**exp, b=1, c=2.5, z=2, p=0.5),
            _pt(**ml, b=1.2, c=3.4, z=0.5, p=0.5),
            _pt(**ml, b=0.5, c=1.5, z=-2, p=0),
        )),
        PlanEntry(I.DIFF_GHF, (
            _pt(**exp, a=1, b=1, c=2, z=0.3, p=0, n=1),
            _pt(**ml, a=0.5, b=1, c=2.5, z=0.25, p=0.5, n=2),
            _pt(**hi, a=1.2, b=0.8, c=2.2, z=-0.4, p=1, n=1),
            _pt(**exp, a=0.5, b=1.5, c=3, z=0.5, p=0.2, n=2),
        )),
        PlanEntry(I.DIFF_CHF, (
            _pt(**exp, b=1, c=2, z=0.5, p=0, n=1),
            _pt(**ml, b=1.2, c=3.4, z=-1, p=0.7, n=2),
            _pt(**hi, b=0.5, c=1.5, z=2, p=0.3, n=1),
            _pt(**exp, b=2, c=5, z=1.5, p=1, n=2),
        )),
        PlanEntry(I.MELLIN_GHF, (
            _pt(**exp, a=0.5, b=1, c=2.5, z=0.3, s=0.5),
            _pt(**ml, a=0.5, b=1, c=2.5, z=-0.5, s=1.5),
            _pt(**hi, a=1.2, b=0.8, c=2.2, z=0.6, s=0.4),
            _pt(**ml, a=1, b=1.5, c=4, z=0.8, s=0.7),
        )),
        PlanEntry(I.MELLIN_CHF, (
            _pt(**exp, b=1, c=2.5, z=0.6, s=0.5),
            _pt(**ml, b=1, c=2.5, z=-1, s=1.5),
            _pt(**hi, b=0.8, c=2.2, z=1.2, s=0.4),
            _pt(**ml, b=1.5, c=4, z=2, s=0.7),
        )),
        PlanEntry(I.PFAFF, (
            _pt(**exp, a=0.5, b=1, c=2.5, z=-1, p=0),
            _pt(**ml, a=0.5, b=1.3, c=2, z=-0.6, p=0.5),
            _pt(**exp, a=1.2, b=0.8, c=2.2, z=0.5, p=0.3),
            _pt(**hi, a=0.7, b=1.5, c=3, z=-2, p=1),
        )),
        PlanEntry(I.REMARK_TRANSFORM_1, (
            _pt(**exp, a=0.5, b=1, c=2.5, z=0.4, p=0),
            _pt(**exp, a=0.5, b=1, c=2.5, z=0.5, p=0.3),
            _pt(**ml, a=1.2, b=0.8, c=2.2, z=2, p=0.5),
            _pt(**hi, a=0.7, b=1.5, c=3, z=0.8, p=1),
        )),
        PlanEntry(I.REMARK_TRANSFORM_2, (
            _pt(**exp, a=0.5, b=1, c=2.5, z=0.4, p=0),
            _pt(**exp, a=0.5, b=1, c=2.5, z=-0.5, p=0.3),
            _pt(**ml, a=1.2, b=0.8, c=2.2, z=1.5, p=0.5),
            _pt(**hi, a=0.7, b=1.5, c=3, z=0.6, p=1),
        )),
        PlanEntry(I.KUMMER, (
            _pt(**exp, b=1, c=3, z=0.7, p=0),
            _pt(**ml, b=1.2, c=3.1, z=-0.9, p=1),
            _pt(**hi, b=0.5, c=1.5, z=2, p=0.5),
            _pt(**exp, b=2, c=2.5, z=-3, p=0.2),
        )),
        PlanEntry(I.RECURRENCE_DELTA_A, (
            _pt(**exp, a=0.5, b=1, c=2.5, z=0.3, p=0),
            _pt(**exp, a=1, b=1.5, c=4, z=-0.4, p=0.5),
            _pt(**ml, a=0.5, b=1, c=2.5, z=0.6, p=0.7),
            _pt(**hi, a=1.2, b=0.8, c=2.2, z=-0.7, p=0.3),
        )),
        PlanEntry(I.VALUE_AT_ONE, (
            _pt(**exp, a=0.5, b=1, c=3, p=0),
            _pt(**ml, a=0.5, b=1, c=3, p=0.5),
            _pt(**exp, a=1.2, b=1, c=2.5, p=0.4),
            _pt(**ml, a=2, b=1, c=2.5, p=0.5),
        )),
        PlanEntry(I.REDUCTION_CHAUDHRY, (
            _pt(**exp, function="beta", x=1.3, y=2.1, p=1),
            _pt(**exp, function="gamma", x=1.3, p=0.1),
            _pt(**exp, function="2f1", a=0.5, b=1, c=2.5, z=0.4, p=5),
            _pt(**exp, function="1f1", b=1.2, c=3.4, z=-2, p=1),
        )),
        PlanEntry(I.REDUCTION_CLASSICAL, (
            _pt(**exp, function="beta", x=2, y=3, p=0),
            _pt(**exp, function="gamma", x=5, p=0),
            _pt(**exp, function="2f1", a=1, b=1, c=2, z=0.5, p=0),
            _pt(**exp, function="1f1", b=1, c=2, z=1, p=0),
            _pt(alpha=0.7, beta=2, gamma=1.8, function="beta", x=1.5, y=2.5, p=0),
        )),
    ]
