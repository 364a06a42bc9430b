# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Generalized gamma and beta functions
#
# `ml_gamma_p(x, p, params)` integrates `t**(x-1) E(-t - p/t)` over `(0, inf)`
# and `ml_beta_p(x, y, p, params)` integrates
# `t**(x-1) (1-t)**(y-1) E(-p / (t (1-t)))` over `(0, 1)`.

# %%
import numpy as np

from mlspecial import (
    Affine,
    DomainError,
    MLParams,
    beta_fn,
    beta_mellin_quadrature,
    chaudhry_beta_p,
    gamma_fn,
    mellin_beta_rhs,
    ml_beta_p,
    ml_gamma_mellin,
    ml_gamma_p,
    ml_gamma_product_polar,
)

EXP = MLParams(1, 1, 1)
ML = MLParams(0.7, 1.3, 2)

# %% [markdown]
# ## Reductions
#
# With the exponential kernel and `p = 0` these are Euler's functions; with
# `p > 0` they are the exp-kernel extended functions.

# %%
print(ml_beta_p(2.5, 4, 0, EXP).value, beta_fn(2.5, 4))
print(ml_gamma_p(2.5, 0, EXP).value, gamma_fn(2.5))
print(ml_beta_p(1.3, 2.1, 1.0, EXP).value, chaudhry_beta_p(1.3, 2.1, 1.0).value)

# %% [markdown]
# At `p = 0` the kernel is the constant `1/Gamma(beta)`, so the beta function
# reduces to the classical one whenever `beta` is 1 or 2, whatever `alpha`
# and `gamma` are.  The gamma function does not: at `p = 0` it becomes the
# Mellin transform of the kernel.

# %%
q = MLParams(0.7, 2, 1.8)
print(ml_beta_p(1.5, 2.5, 0, q).value, beta_fn(1.5, 2.5))
print(ml_gamma_p(1.2, 0, q).value, ml_gamma_mellin(1.2, q), gamma_fn(1.2))

# %% [markdown]
# ## Dependence on p
#
# A positive kernel makes the beta function decrease in `p`; a kernel that
# changes sign need not.

# %%
ps = np.linspace(0, 3, 7)
print([round(ml_beta_p(1.3, 2.1, p, EXP).value, 6) for p in ps])
print([round(ml_beta_p(1.3, 2.1, p, ML).value, 6) for p in ps])

# %% [markdown]
# ## Convergence screening
#
# For `p > 0` the kernel tames the endpoints, so `x` and `y` may be
# non-positive as long as `x - 1 + r > -1`.

# %%
print(ml_beta_p(-0.5, 1.5, 0.3, ML))
try:
    ml_beta_p(-2.5, 1.5, 0.3, ML)
except DomainError as exc:
    print("rejected:", exc)

# %% [markdown]
# ## Five integral forms
#
# The unit-interval integral, `t = cos(theta)**2`, `t = u/(1+u)`, the form
# over `(-1, 1)` and any affine interval all give the same number.

# %%
for rep in ["unit", "trig", "semi-infinite", "symmetric", Affine(-2, 3)]:
    print(rep, ml_beta_p(1.5, 2.5, 1.0, ML, rep).value)

# %% [markdown]
# ## Product and Mellin forms
#
# `Gamma_p(x) Gamma_p(y)` has a polar double-integral form, and the Mellin
# transform in `p` of the beta function factors into the kernel's Mellin
# transform times a classical beta function.

# %%
print(ml_gamma_p(0.7, 0.3, ML).value * ml_gamma_p(1.2, 0.3, ML).value,
      ml_gamma_product_polar(0.7, 1.2, 0.3, ML).value)
print(beta_mellin_quadrature(2, 3, 0.5, ML).value, mellin_beta_rhs(2, 3, 0.5, ML))
