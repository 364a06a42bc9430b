# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Generalized Gauss and confluent functions
#
# `ml_2f1(a, b, c, z, p, params)` has series coefficients
# `(a)_n B_p(b+n, c-b) / (n! B(b, c-b))`; `ml_1f1` drops `(a)_n`.

# %%
import numpy as np
from scipy import special

from mlspecial import (
    MLParams,
    kummer_transform_rhs,
    ml_1f1,
    ml_1f1_nth_derivative,
    ml_2f1,
    ml_2f1_at_one,
    ml_2f1_nth_derivative,
    pfaff_printed_reading_diagnostic,
    pfaff_transform_rhs,
    transform_one_minus_inv_z,
    transform_z_over_one_plus_z,
)

EXP = MLParams(1, 1, 1)
ML = MLParams(0.7, 1.3, 2)

# %% [markdown]
# ## Series and integral forms agree

# %%
for method in ["series", "unit", "semi-infinite", "trig", "tanh"]:
    print(f"{method:14s}", ml_2f1(0.5, 1, 2.5, 0.3, 0.5, ML, method).value)
for method in ["series", "direct", "reflected"]:
    print(f"{method:14s}", ml_1f1(1.2, 3.4, 1.5, 0.5, ML, method).value)

# %% [markdown]
# At `p = 0` with the exponential kernel the classical functions come back.

# %%
print(ml_2f1(0.5, 1, 2.5, -0.5, 0, EXP).value, special.hyp2f1(0.5, 1, 2.5, -0.5))
print(ml_1f1(1.2, 3.4, -2, 0, EXP).value, special.hyp1f1(1.2, 3.4, -2))

# %% [markdown]
# ## Derivatives
#
# Differentiating raises all parameters by one.

# %%
z, h = 0.25, 1e-4
fd = (ml_2f1(0.5, 1, 2.5, z + h, 0.5, ML, "unit").value
      - ml_2f1(0.5, 1, 2.5, z - h, 0.5, ML, "unit").value) / (2 * h)
print(ml_2f1_nth_derivative(1, 0.5, 1, 2.5, z, 0.5, ML).value, fd)
print(ml_1f1_nth_derivative(2, 1.2, 3.4, -1, 0.7, ML).value)

# %% [markdown]
# ## Transformations
#
# The Pfaff map `z -> z/(z-1)` keeps `a` and `c` and replaces `b` by `c - b`.
# Writing `b` in the third slot does not work even classically.

# %%
print(ml_2f1(0.5, 1.3, 2, -0.6, 0.5, ML).value, pfaff_transform_rhs(0.5, 1.3, 2, -0.6, 0.5, ML).value)
diag = pfaff_printed_reading_diagnostic(0.5, 1, 2.5, -1)
print(f"third parameter c: rel diff {diag.rel_diff_c:.1e}; third parameter b: rel diff {diag.rel_diff_b:.2f}")

# %% [markdown]
# Substituting `1 - 1/z` and `z/(1+z)` into the same map gives two more
# forms; the second lands on argument `-z`.

# %%
print(ml_2f1(1.2, 0.8, 2.2, 1 - 1 / 2.0, 0.5, ML).value, transform_one_minus_inv_z(1.2, 0.8, 2.2, 2.0, 0.5, ML).value)
print(ml_2f1(1.2, 0.8, 2.2, 1.5 / 2.5, 0.5, ML).value, transform_z_over_one_plus_z(1.2, 0.8, 2.2, 1.5, 0.5, ML).value)
print(ml_1f1(1.2, 3.1, -0.9, 1, ML).value, kummer_transform_rhs(1.2, 3.1, -0.9, 1, ML).value)

# %% [markdown]
# ## The value at z = 1
#
# `F_p(a, b; c; 1) = B_p(b, c-a-b) / B(b, c-b)`.  For `p > 0` the kernel's
# decay lets this converge even when `c - a - b <= 0`.

# %%
print(ml_2f1_at_one(2, 1, 2.5, 0.5, ML).value, ml_2f1(2, 1, 2.5, 1.0, 0.5, ML, "unit").value)
zs = np.array([0.9, 0.99, 0.999])
print([ml_2f1(2, 1, 2.5, z, 0.5, ML, "unit").value for z in zs])
