"""Mittag-Leffler generalized gamma, beta and hypergeometric functions.

The kernel ``E_{alpha,beta}^gamma(-u)`` (a three-parameter Mittag-Leffler
function) replaces ``exp(-u)`` in the extended gamma and beta integrals; the
generalized Gauss and confluent functions are built on the resulting beta
function.  :mod:`mlspecial.identities` checks the identities these functions
satisfy, numerically and by independent evaluation paths.
"""

from .classical import (
    HypArgs,
    beta_fn,
    chaudhry_1f1,
    chaudhry_2f1,
    chaudhry_beta_p,
    chaudhry_gamma_p,
    gamma_fn,
    gauss_2f1,
    kummer_1f1,
    pochhammer,
)
from .errors import DomainError, NonConvergenceError, PoleError
from .gamma_beta import (
    REPRESENTATIONS,
    Affine,
    BetaArgs,
    beta_mellin_quadrature,
    mellin_beta_rhs,
    ml_beta_p,
    ml_beta_p_many,
    ml_gamma_mellin,
    ml_gamma_p,
    ml_gamma_product_polar,
)
from .hypergeometric import (
    MLHypPoint,
    chf_mellin_quadrature,
    chf_mellin_rhs,
    ghf_mellin_quadrature,
    ghf_mellin_rhs,
    kummer_transform_rhs,
    ml_1f1,
    ml_1f1_nth_derivative,
    ml_2f1,
    ml_2f1_at_one,
    ml_2f1_nth_derivative,
    pfaff_printed_reading_diagnostic,
    pfaff_transform_rhs,
    recurrence_residual,
    transform_one_minus_inv_z,
    transform_z_over_one_plus_z,
)
from .identities import PlanEntry, SuiteReport, check_identity, default_plan, run_suite
from .mittag_leffler import MLParams, ml3, ml3_asymptotic, ml3_negative, ml3_series, tail_order
from .numerics import Estimate, QuadratureConfig
from .reports import CheckReport, EvalPoint, IdentityId, Status

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
