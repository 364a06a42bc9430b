# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # The three-parameter Mittag-Leffler kernel
#
# Everything in `mlspecial` is built on `E(alpha, beta, gamma; -u)` for
# `u >= 0`.  This notebook looks at how it is evaluated and how it behaves.

# %%
import math

import numpy as np

from mlspecial import MLParams, ml3, ml3_asymptotic, ml3_negative, ml3_series, tail_order
from mlspecial.mittag_leffler import z_cross

# %% [markdown]
# ## Familiar special cases
#
# `(1, 1, 1)` is the exponential, `(2, 1, 1)` at `-z**2` is the cosine and
# `(1/2, 1, 1)` at `-u` is `exp(u**2) erfc(u)`.

# %%
from scipy.special import erfcx

for z in (-5.0, -2.0, 0.0, 1.0, 3.0):
    print(f"z={z:5}: E={ml3(MLParams(1, 1, 1), z).value:.16g}  exp={math.exp(z):.16g}")
for z in (0.5, 1.0, 2.0):
    print(f"z={z}: E={ml3(MLParams(2, 1, 1), -z * z).value:.16g}  cos={math.cos(z):.16g}")
u = np.array([0.1, 1.0, 10.0, 1e3])
print(ml3_negative(MLParams(0.5, 1, 1), u) / erfcx(u) - 1)

# %% [markdown]
# ## Why plain summation is not enough
#
# The power series alternates on the negative axis and its terms reach
# `exp(u**(1/alpha))` before they decay, so double precision loses all digits
# once `u**(1/alpha)` passes about 36.  The kernel evaluator switches regimes at
# `z_cross(alpha) = 40**alpha`: below it a double-double Horner scheme over
# 40-digit coefficients, above it the optimally truncated algebraic expansion
# (plus the exponentially small part when `alpha > 1`).

# %%
params = MLParams(0.7, 1.3, 2)
print("crossover", z_cross(params.alpha))
for u in (5.0, 20.0, 40.0, 80.0):
    plain = ml3_series(params, -u).value
    careful = ml3_series(params, -u, extended=True).value
    fast = ml3(params, -u).value
    print(f"u={u:5}: plain={plain: .3e}  multiprecision={careful: .16e}  ml3={fast: .16e}")

# %% [markdown]
# Just above the crossover the expansion and the multiprecision series overlap.

# %%
u = 1.5 * z_cross(params.alpha)
asym = ml3_asymptotic(params, u)
print(asym, ml3_series(params, -u, extended=True).value)

# %% [markdown]
# ## Algebraic tail and its order
#
# For large `u` the kernel decays like `u**-r`, where `r` is `gamma`
# shifted past any vanishing leading coefficients.  It decides which
# generalized integrals converge.

# %%
for abc in [(1, 1, 1), (0.7, 1.3, 2), (0.5, 1, 2), (1, 2, 1), (1.5, 1, 1), (2, 1, 1)]:
    print(abc, "tail order", tail_order(MLParams(*abc)))

us = np.logspace(2, 8, 4)
print(us**2 * ml3_negative(params, us))
