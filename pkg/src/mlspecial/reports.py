"""Records shared by the identity checks: evaluation points and residual reports."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields

from .mittag_leffler import MLParams

__all__ = ["SCALE_FLOOR", "CheckReport", "EvalPoint", "IdentityId", "Status", "compare", "skipped"]

SCALE_FLOOR = 1e-30


class IdentityId(str, enum.Enum):
    """Closed catalog of the identities that can be checked numerically."""

    THM1_PRODUCT = "THM1_PRODUCT"
    THM2_SUMMATION = "THM2_SUMMATION"
    THM3_FUNCTIONAL = "THM3_FUNCTIONAL"
    THM4_SUMMATION = "THM4_SUMMATION"
    THM5_REPRESENTATIONS = "THM5_REPRESENTATIONS"
    THM6_MELLIN_BETA = "THM6_MELLIN_BETA"
    GHF_SERIES_VS_INTEGRAL = "GHF_SERIES_VS_INTEGRAL"
    CHF_SERIES_VS_INTEGRAL = "CHF_SERIES_VS_INTEGRAL"
    DIFF_GHF = "DIFF_GHF"
    DIFF_CHF = "DIFF_CHF"
    MELLIN_GHF = "MELLIN_GHF"
    MELLIN_CHF = "MELLIN_CHF"
    PFAFF = "PFAFF"
    REMARK_TRANSFORM_1 = "REMARK_TRANSFORM_1"
    REMARK_TRANSFORM_2 = "REMARK_TRANSFORM_2"
    KUMMER = "KUMMER"
    RECURRENCE_DELTA_A = "RECURRENCE_DELTA_A"
    VALUE_AT_ONE = "VALUE_AT_ONE"
    REDUCTION_CHAUDHRY = "REDUCTION_CHAUDHRY"
    REDUCTION_CLASSICAL = "REDUCTION_CLASSICAL"

    def __str__(self) -> str:
        return self.value


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"

    def __str__(self) -> str:
        return self.value


_NUMERIC = ("p", "x", "y", "a", "b", "c", "z", "s")


@dataclass(frozen=True)
class EvalPoint:
    """A parameter assignment; each identity reads the fields it needs.

    ``function`` selects the member of a family for the reduction checks
    (``"beta"``, ``"gamma"``, ``"2f1"`` or ``"1f1"``).
    """

    params: MLParams | None = None
    p: float | None = None
    x: float | None = None
    y: float | None = None
    a: float | None = None
    b: float | None = None
    c: float | None = None
    z: float | None = None
    s: float | None = None
    n: int | None = None
    function: str | None = None

    def require(self, *names: str) -> tuple:
        """Return the requested fields, raising KeyError for missing ones."""
        out = []
        for name in names:
            value = getattr(self, name)
            if value is None:
                raise KeyError(name)
            out.append(value)
        return tuple(out)

    def as_dict(self) -> dict:
        """Present fields only; params flattened to alpha/beta/gamma."""
        out: dict = {}
        if self.params is not None:
            out.update(alpha=self.params.alpha, beta=self.params.beta, gamma=self.params.gamma)
        for f in fields(self):
            if f.name == "params":
                continue
            value = getattr(self, f.name)
            if value is not None:
                out[f.name] = value
        return out

    @classmethod
    def from_mapping(cls, data: dict) -> "EvalPoint":
        """Build from flat ``alpha, beta, gamma, p, x, ...`` keys (strings or numbers)."""
        data = dict(data)
        params = None
        triple = [data.pop(k, None) for k in ("alpha", "beta", "gamma")]
        if any(v is not None for v in triple):
            if any(v is None for v in triple):
                raise ValueError("alpha, beta and gamma must be given together")
            params = MLParams(*(float(v) for v in triple))
        kwargs: dict = {"params": params}
        for key, value in data.items():
            if key in _NUMERIC:
                kwargs[key] = float(value)
            elif key == "n":
                kwargs[key] = int(value)
            elif key == "function":
                kwargs[key] = str(value)
            else:
                raise ValueError(f"unknown point field {key!r}")
        return cls(**kwargs)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check at one point."""

    identity: IdentityId
    point: EvalPoint
    lhs: float
    rhs: float
    abs_diff: float
    rel_diff: float
    tolerance: float
    status: Status
    cost: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def as_dict(self) -> dict:
        return {
            "identity": str(self.identity),
            "point": self.point.as_dict(),
            "lhs": _finite(self.lhs),
            "rhs": _finite(self.rhs),
            "abs_diff": _finite(self.abs_diff),
            "rel_diff": _finite(self.rel_diff),
            "tolerance": self.tolerance,
            "status": str(self.status),
            "cost": self.cost,
            "note": self.note,
        }


def _finite(v: float) -> float | None:
    return v if math.isfinite(v) else None


def compare(identity: IdentityId, point: EvalPoint, lhs: float, rhs: float, tolerance: float,
            *, cost: int = 0, note: str = "", allowance: float = 0.0) -> CheckReport:
    """Residual report for ``lhs`` against ``rhs``.

    Passes when ``rel_diff <= tolerance`` or ``abs_diff <= tolerance *
    SCALE_FLOOR``.  ``allowance`` is an extra absolute slack, used by the
    truncated summations whose tail is estimated separately.
    """
    abs_diff = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs), SCALE_FLOOR)
    rel_diff = abs_diff / scale
    if not (math.isfinite(lhs) and math.isfinite(rhs)):
        ok = False
        rel_diff = abs_diff = math.inf
    else:
        ok = rel_diff <= tolerance or abs_diff <= tolerance * SCALE_FLOOR or abs_diff <= allowance
    return CheckReport(identity, point, float(lhs), float(rhs), float(abs_diff), float(rel_diff),
                       float(tolerance), Status.PASS if ok else Status.FAIL, int(cost), note)


def skipped(identity: IdentityId, point: EvalPoint, tolerance: float, reason: str) -> CheckReport:
    nan = math.nan
    return CheckReport(identity, point, nan, nan, nan, nan, float(tolerance), Status.SKIP, 0, reason)
