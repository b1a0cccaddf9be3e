"""
A two-variable series for SL(3)
===============================

One Euler operator per positive root, applied to 1/((1-q1)(1-q2)).
"""

# %%
from weylgen import ConeSpec, hilbert_series, operator_for_root, expand

cone = ConeSpec.of(["A2"], [(3, 0), (0, 3)])
for alpha in cone.rs.positive_roots:
    print(alpha, operator_for_root(cone, alpha))

# %%
# The closed form, kept unreduced.
f = hilbert_series(cone)
print(f)

# %%
# Its expansion lists dim L(3a w1 + 3b w2) for small (a, b).
print(expand(f, (3, 3)).entries)

# %%
# Collapse both gradings to one variable.  Here the numerator picks up a
# factor (1 - q), so the reduced form has a smaller denominator.
from weylgen import reduce_univariate, specialize

u = specialize(f, (1, 1))
print("unreduced:", u)
print("reduced:  ", reduce_univariate(u))
