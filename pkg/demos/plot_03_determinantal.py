"""
Hilbert series of determinantal varieties
=========================================

Symmetric matrices of rank <= k correspond to the cone <2w1, ..., 2wk> in
SL(n); the grading q_i -> q^i gives the standard Hilbert series.
"""

# %%
from weylgen import (
    antisymmetric_determinantal,
    hilbert_series,
    reduce_univariate,
    specialize,
    symmetric_determinantal,
)


def standard_series(problem):
    f = hilbert_series(problem.cone)
    return reduce_univariate(specialize(f, problem.grading))


# %%
# Rank <= 2 symmetric 4x4 matrices.
p = symmetric_determinantal(4, 2)
print(p.notes)
print(standard_series(p))

# %%
# A small table for rank <= 2 and growing n.
for n in range(3, 7):
    print(n, standard_series(symmetric_determinantal(n, 2)))

# %%
# Antisymmetric 2n x 2n matrices of rank <= 2k use <w2, w4, ..., w2k>.  For
# n = 2, k = 1 this is the Pfaffian quadric in six variables.
for n, k in [(2, 1), (3, 1), (3, 2)]:
    print(n, k, standard_series(antisymmetric_determinantal(n, k)))
