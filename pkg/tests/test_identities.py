import json

import pytest

from mlspecial.identities import (
    DEFAULT_TOLERANCES,
    PlanEntry,
    check_identity,
    default_plan,
    run_suite,
)
from mlspecial.mittag_leffler import MLParams
from mlspecial.reports import EvalPoint, IdentityId, Status

EXP = MLParams(1, 1, 1)
ML = MLParams(0.7, 1.3, 2)


def test_default_plan_covers_catalog():
    plan = default_plan()
    covered = {e.identity for e in plan}
    assert covered == set(IdentityId)
    assert all(len(e.points) >= 4 for e in plan)
    assert set(DEFAULT_TOLERANCES) == set(IdentityId)


def test_documented_examples():
    r = check_identity(IdentityId.THM3_FUNCTIONAL, EvalPoint(params=ML, x=1.3, y=2.1, p=0.5), 1e-8)
    assert r.passed
    r = check_identity(IdentityId.REDUCTION_CLASSICAL,
                       EvalPoint(params=EXP, x=2, y=3, p=0, function="beta"), 1e-8)
    assert r.passed
    assert r.lhs == pytest.approx(1 / 12) and r.rhs == pytest.approx(1 / 12)
    r = check_identity(IdentityId.THM1_PRODUCT, EvalPoint(params=EXP, x=1, y=1, p=0), 1e-4)
    assert r.passed and r.lhs == pytest.approx(1.0)


def test_out_of_domain_is_skipped():
    r = check_identity(IdentityId.REMARK_TRANSFORM_1,
                       EvalPoint(params=EXP, a=0.5, b=1, c=2.5, z=-1, p=0))
    assert r.status is Status.SKIP
    r = check_identity(IdentityId.THM6_MELLIN_BETA, EvalPoint(params=ML, x=1, y=1, s=2.5))
    assert r.status is Status.SKIP


def test_missing_field_is_skipped():
    r = check_identity(IdentityId.KUMMER, EvalPoint(params=EXP, b=1, c=2, p=0))
    assert r.status is Status.SKIP
    assert "z" in r.note


def test_reduction_needs_exponential_kernel():
    r = check_identity(IdentityId.REDUCTION_CHAUDHRY,
                       EvalPoint(params=ML, x=1, y=1, p=1, function="beta"))
    assert r.status is Status.SKIP


def test_classical_reduction_of_gamma_needs_exponential_kernel():
    # at p = 0 the generalized gamma is the Mellin transform of the kernel, not Gamma(x)
    r = check_identity(IdentityId.REDUCTION_CLASSICAL,
                       EvalPoint(params=MLParams(0.7, 2, 1.8), x=1.2, p=0, function="gamma"))
    assert r.status is Status.FAIL


def test_unreachable_tolerance_fails():
    r = check_identity(IdentityId.THM3_FUNCTIONAL, EvalPoint(params=ML, x=1.3, y=2.1, p=0.5), 1e-20)
    assert r.status is Status.FAIL


def test_summation_reports_tail_and_monotonicity():
    r = check_identity(IdentityId.THM4_SUMMATION, EvalPoint(params=EXP, x=1.5, y=0.5, p=0.5))
    assert r.passed
    assert "monotone" in r.note and "tail" in r.note


def test_suite_aggregation_and_isolation():
    plan = [
        PlanEntry(IdentityId.THM3_FUNCTIONAL, (EvalPoint(params=ML, x=1.3, y=2.1, p=0.5),
                                               EvalPoint(params=ML, x=-9, y=2.1, p=0.5))),
        PlanEntry(IdentityId.KUMMER, ()),
    ]
    suite = run_suite(plan)
    assert suite.counts() == {"pass": 1, "fail": 0, "skip": 1}
    assert suite.identity_status(IdentityId.KUMMER) is Status.SKIP
    assert suite.status is Status.SKIP
    assert suite.exit_code() == 4
    data = json.loads(suite.to_json())
    assert [d["identity"] for d in data["identities"]] == ["THM3_FUNCTIONAL", "KUMMER"]
    assert "(no points)" in suite.to_markdown()


def test_fail_fast_stops():
    bad = EvalPoint(params=ML, x=1.3, y=2.1, p=0.5)
    plan = [PlanEntry(IdentityId.THM3_FUNCTIONAL, (bad, bad), tolerance=1e-20)]
    assert len(run_suite(plan, fail_fast=True).reports) == 1
    assert run_suite(plan).exit_code() == 5


def test_empty_plan_rejected():
    with pytest.raises(ValueError):
        run_suite([])


def test_suite_is_deterministic():
    plan = [PlanEntry(IdentityId.PFAFF, default_plan()[12].points)]
    assert run_suite(plan).to_json() == run_suite(plan).to_json()
