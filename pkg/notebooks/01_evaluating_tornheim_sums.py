# %% [markdown]
# # Evaluating Tornheim sums
#
# T(a, b, c) = sum over m, n >= 1 of 1 / (m^a n^b (m + n)^c).
# Every evaluator returns a value together with an error figure and the
# route that produced it.

# %%
import mpmath
from mpmath import mp

import tornheim
from tornheim.core.analytic import tornheim_analytic, tornheim_two_int
from tornheim.core.direct import tornheim_direct
from tornheim.core.integer import tornheim_integer

print("working precision:", tornheim.get_precision(), "digits")

# %% [markdown]
# ## The dispatcher
#
# `evaluate` picks an exact closed form when one is known and otherwise
# falls back to the direct double sum.

# %%
for t in [(1, 1, 1), (2, 2, 2), (1, 2, 3), (1.5, 1.5, 1.5)]:
    r = tornheim.evaluate(*t)
    print(t, mpmath.nstr(r.value, 25), r.method.value, mpmath.nstr(r.err, 3))

# %%
print("T(1,1,1) - 2 zeta(3) =", tornheim.evaluate(1, 1, 1).value - 2 * mpmath.zeta(3))

# %% [markdown]
# ## Same value, different routes
#
# At non-integer parameters the integral representation is independent of
# the double sum, so agreement between the two is a real check.

# %%
t = (mpmath.mpf("2.5"), mpmath.mpf("1.5"), mpmath.mpf("2.5"))
d, a = tornheim_direct(*t), tornheim_analytic(*t)
print("direct  ", mpmath.nstr(d.value, 25))
print("analytic", mpmath.nstr(a.value, 25))
print("gap     ", mpmath.nstr(abs(d.value - a.value), 3))

# %%
c = mpmath.mpf("2.5")
print("two-integer limit", mpmath.nstr(tornheim_two_int(2, 1, c).value, 25))
print("direct           ", mpmath.nstr(tornheim_direct(2, 1, c).value, 25))

# %% [markdown]
# ## Positive integers
#
# The parity assembly combines a handful of one-dimensional integrals.

# %%
for t in [(1, 1, 2), (2, 1, 2), (2, 3, 2), (4, 3, 2)]:
    i, d = tornheim_integer(*t), tornheim_direct(*t)
    print(t, mpmath.nstr(i.value, 20), "gap", mpmath.nstr(abs(i.value - d.value), 3))

# %% [markdown]
# ## Raising the precision

# %%
with mp.workdps(50):
    print(mpmath.nstr(tornheim_direct(2, 2, 2).value - mp.pi ** 6 / 2835, 5))
