"""
Weyl dimensions from Cartan data
================================

Root systems are built from their Cartan matrices; positive roots come out
of a height-by-height closure.  Dimensions are products over those roots.
"""

# %%
# Build a few root systems and look at their positive roots.
from weylgen import build_root_system, weyl_dim

g2 = build_root_system(["G2"])
print("G2 Cartan matrix:", g2.cartan)
print("G2 positive roots:", [str(r) for r in g2.positive_roots])

# %%
# The first few G2 modules: 7, 14, 27, 64, 77, ...
for lam in [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
    print(lam, weyl_dim(g2, lam))

# %%
# Exceptional groups work the same way.  The adjoint module of E8 sits on
# the last node in Bourbaki numbering.
e8 = build_root_system(["E8"])
print("E8 has", e8.num_positive_roots, "positive roots")
print("dim L(w8) =", weyl_dim(e8, (0,) * 7 + (1,)))

# %%
# Products concatenate: A1 x G2 with weight (1; 1, 0) is 2 * 7.
print(weyl_dim(build_root_system(["A1", "G2"]), (1, 1, 0)))
