# %% [markdown]
# # Hurwitz zeta, Bernoulli polynomials and negapolygammas
#
# The building blocks behind the integral routes.

# %%
import mpmath
import numpy as np

from tornheim.bernoulli_algebra import integral_BBB, product_expand
from tornheim.polygamma_neg import negapolygamma
from tornheim.specfun import bernoulli_poly, hurwitz_zeta, hurwitz_zeta_zderiv, log_gamma

# %% [markdown]
# ## Zeta at negative integers is a Bernoulli polynomial

# %%
for k in range(1, 6):
    q = mpmath.mpf("0.3")
    print(k, mpmath.nstr(hurwitz_zeta(1 - k, q).value + bernoulli_poly(k, q) / k, 3))

# %% [markdown]
# ## Lerch: the z-derivative at 0 is log Gamma up to a constant

# %%
qs = np.linspace(0.05, 1, 6)
for q in qs:
    q = mpmath.mpf(q)
    gap = hurwitz_zeta_zderiv(0, q).value - (log_gamma(q).value - mpmath.log(2 * mpmath.pi) / 2)
    print(f"{float(q):.2f}", mpmath.nstr(gap, 3))

# %% [markdown]
# ## Balanced negapolygammas agree at both ends of [0, 1]

# %%
eps = mpmath.mpf("1e-12")
for m in range(2, 6):
    print(m, mpmath.nstr(negapolygamma(m, eps).value, 15), mpmath.nstr(negapolygamma(m, 1 - eps).value, 15))

# %% [markdown]
# ## Products of Bernoulli polynomials in the Bernoulli basis

# %%
print(product_expand(2, 3))
print("integral of B2 B2 B2 over [0, 1]:", integral_BBB(2, 2, 2))
