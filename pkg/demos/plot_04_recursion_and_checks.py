"""
Recursion in n and brute-force verification
===========================================

Going from SL(n-1) to SL(n) on <2w1, 2w2> adds exactly two operators.
Every closed form can be checked against a direct table of Weyl dimensions.
"""

# %%
from weylgen import ConeSpec, hilbert_series, lemma_operators, lemma_recursion_step

f = hilbert_series(ConeSpec.of(["A2"], [(2, 0), (0, 2)]))
for n in range(4, 8):
    print(n, [str(op) for op in lemma_operators(n)])
    f = lemma_recursion_step(n, f)
    direct = hilbert_series(ConeSpec.of([("A", n - 1)], [[2, 0] + [0] * (n - 3), [0, 2] + [0] * (n - 3)]))
    print("   matches direct computation:", f == direct, " den_exps:", f.den_exps)

# %%
# Compare a closed form with the brute-force table.
from weylgen import verify_equivalence

cone = ConeSpec.of(["D4"], [(1, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 0)])
print(verify_equivalence(hilbert_series(cone), cone, (4, 4, 4)))

# %%
# A corrupted numerator is caught at the first affected multidegree.
from weylgen import EulerRational, Poly

g = hilbert_series(ConeSpec.of(["A2"], [(3, 0), (0, 3)]))
bad = EulerRational(g.numerator + Poly({(2, 2): 16}, 2), g.den_exps)
print(verify_equivalence(bad, ConeSpec.of(["A2"], [(3, 0), (0, 3)]), (3, 3)))
