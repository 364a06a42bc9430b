import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mlspecial.mittag_leffler import MLParams
from mlspecial.reports import SCALE_FLOOR, EvalPoint, IdentityId, Status, compare, skipped

PT = EvalPoint(params=MLParams(1, 1, 1), x=1.0)


def test_catalog_is_closed_and_complete():
    assert len(IdentityId) == 20
    assert str(IdentityId.PFAFF) == "PFAFF"


def test_relative_residual_definition():
    r = compare(IdentityId.THM3_FUNCTIONAL, PT, 1.0, 1.0 + 1e-9, 1e-8)
    assert r.passed
    assert r.rel_diff == pytest.approx(1e-9 / (1 + 1e-9))
    assert not compare(IdentityId.THM3_FUNCTIONAL, PT, 1.0, 1.1, 1e-8).passed


def test_scale_floor_handles_zeros():
    r = compare(IdentityId.THM3_FUNCTIONAL, PT, 0.0, 0.0, 1e-8)
    assert r.passed and r.rel_diff == 0.0
    r = compare(IdentityId.THM3_FUNCTIONAL, PT, 0.0, 1e-40, 1e-8)
    assert r.passed  # abs_diff below tolerance * scale_floor


@given(lhs=st.floats(-1e6, 1e6), rhs=st.floats(-1e6, 1e6), tol=st.floats(1e-12, 1e-1))
def test_never_passes_outside_tolerance(lhs, rhs, tol):
    r = compare(IdentityId.KUMMER, PT, lhs, rhs, tol)
    if r.rel_diff > tol and r.abs_diff > tol * SCALE_FLOOR:
        assert not r.passed
    else:
        assert r.passed


def test_non_finite_sides_fail():
    r = compare(IdentityId.KUMMER, PT, math.nan, 1.0, 1.0)
    assert r.status is Status.FAIL
    assert r.as_dict()["rel_diff"] is None


def test_skipped_is_not_a_pass():
    r = skipped(IdentityId.KUMMER, PT, 1e-7, "out of domain")
    assert r.status is Status.SKIP and not r.passed


def test_point_round_trip():
    data = {"alpha": "0.7", "beta": 1.3, "gamma": 2, "x": "1.5", "n": "2", "function": "beta"}
    pt = EvalPoint.from_mapping(data)
    assert pt.params == MLParams(0.7, 1.3, 2)
    assert pt.n == 2
    assert pt.as_dict() == {"alpha": 0.7, "beta": 1.3, "gamma": 2.0, "x": 1.5, "n": 2,
                            "function": "beta"}
    with pytest.raises(ValueError):
        EvalPoint.from_mapping({"alpha": 1})
    with pytest.raises(ValueError):
        EvalPoint.from_mapping({"q": 1})
    with pytest.raises(KeyError):
        pt.require("y")
