# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Checking the identities numerically
#
# Every identity in the catalog is a pair of independent evaluation paths.
# `check_identity` runs one pair at one point and returns a residual report.

# %%
import io

from mlspecial import (
    EvalPoint,
    IdentityId,
    MLParams,
    PlanEntry,
    check_identity,
    default_plan,
    run_suite,
)
from mlspecial.cli import main

ML = MLParams(0.7, 1.3, 2)

# %%
report = check_identity(IdentityId.THM3_FUNCTIONAL, EvalPoint(params=ML, x=1.3, y=2.1, p=0.5), 1e-8)
print(report.status, report.lhs, report.rhs, report.rel_diff)

# %% [markdown]
# Truncated summations carry their tail estimate, and out-of-domain points
# are skipped rather than passed.

# %%
print(check_identity(IdentityId.THM4_SUMMATION,
                     EvalPoint(params=MLParams(1, 1, 1), x=1.5, y=0.5, p=0.5)).note)
print(check_identity(IdentityId.MELLIN_GHF,
                     EvalPoint(params=ML, a=0.5, b=1, c=2.5, z=0.3, s=2.5)).note)

# %% [markdown]
# ## A whole suite
#
# The shipped plan covers all twenty identities.

# %%
suite = run_suite(default_plan())
print(suite.counts(), suite.status)
for ident in suite.identities:
    print(f"{ident!s:24s} {suite.identity_status(ident)!s:5s} worst rel diff {suite.worst(ident):.2e}")

# %% [markdown]
# Custom plans mix identities and tolerances.

# %%
plan = [PlanEntry(IdentityId.KUMMER, (EvalPoint(params=ML, b=1.2, c=3.1, z=-0.9, p=1),), 1e-10)]
print(run_suite(plan).to_markdown())

# %% [markdown]
# ## From the command line
#
# The same suite runs as `mlspecial verify --default`; here through `main`.

# %%
out = io.StringIO()
code = main(["table", "ml-beta", "--x", "1:3:3", "--y", "1", "--p", "0",
             "--alpha", "1", "--beta", "1", "--gamma", "1"], out=out)
print(code)
print(out.getvalue())
