import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from weylgen import (
    ConeSpec,
    DimensionError,
    DomainError,
    EulerOp,
    EulerRational,
    Poly,
    PositiveRoot,
    UniRational,
    apply_euler_op,
    expand,
    hilbert_series,
    lemma_operators,
    lemma_recursion_step,
    operator_for_root,
    reduce_univariate,
    specialize,
    verify_equivalence,
)

SL4_NUMERATOR = {
    (0, 0): 1, (1, 0): 6, (0, 1): 15, (2, 0): 1, (1, 1): 16, (0, 2): 15, (0, 3): 1,
    (1, 2): -50, (2, 1): -29, (1, 3): -4, (2, 2): -25, (3, 1): 6, (2, 3): 21,
    (3, 2): 20, (3, 3): 6,
}

# Checked coefficientwise against Weyl dimensions.  Note the sign of the
# q1^2 q2^2 term: +8 would put 359 at a=(2,2), but dim L(6w1+6w2) = 343.
SL3_3W_NUMERATOR = {
    (0, 0): 1, (1, 0): 7, (0, 1): 7, (2, 0): 1, (0, 2): 1, (1, 1): 13,
    (2, 1): -11, (1, 2): -11, (2, 2): -8,
}


def sl4_cone():
    return ConeSpec.of(["A3"], [(2, 0, 0), (0, 2, 0)])


def sl3_cone():
    return ConeSpec.of(["A2"], [(3, 0), (0, 3)])


def q(power=1):
    return Poly.var(0, 1, power)


# -- operators ---------------------------------------------------------

def test_operator_for_simple_root():
    cone = sl3_cone()
    assert operator_for_root(cone, PositiveRoot((1, 0))).coeffs == (3, 0)
    assert operator_for_root(cone, PositiveRoot((1, 1))).coeffs == (Fraction(3, 2), Fraction(3, 2))


def test_operator_for_highest_root_sl4():
    assert operator_for_root(sl4_cone(), PositiveRoot((1, 1, 1))).coeffs == (Fraction(2, 3), Fraction(2, 3))


def test_operator_zero_generator():
    cone = ConeSpec.of(["B3"], [(0, 0, 0), (1, 0, 1)])
    assert all(operator_for_root(cone, a).coeffs[0] == 0 for a in cone.rs.positive_roots)


def test_operator_rejects_foreign_root():
    with pytest.raises(DomainError):
        operator_for_root(sl3_cone(), PositiveRoot((2, 1)))


def test_sl4_operator_list_matches_display():
    ops = sorted(operator_for_root(sl4_cone(), a).coeffs for a in sl4_cone().rs.positive_roots)
    expected = sorted([(2, 0), (0, 2), (1, 1), (0, 1), (Fraction(2, 3), Fraction(2, 3)), (0, 0)])
    assert ops == expected


# -- applying operators ------------------------------------------------

def test_apply_identity():
    f = EulerRational.geometric(1)
    assert apply_euler_op(EulerOp([0]), f) == f


def test_apply_simple():
    f = EulerRational.geometric(1)
    assert apply_euler_op(EulerOp([1]), f) == EulerRational(Poly.one(1), (2,))
    assert apply_euler_op(EulerOp([2]), f) == EulerRational(1 + q(), (2,))


def test_apply_dimension_mismatch():
    with pytest.raises(DimensionError):
        apply_euler_op(EulerOp([1, 1]), EulerRational.geometric(1))


@given(
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=2, max_size=2),
    st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-4, 4), max_size=4),
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
)
@settings(max_examples=40)
def test_apply_multiplies_coefficients(cs, terms, dens):
    # (1 + sum c_j q_j d_j) acts on q^a by the scalar 1 + sum c_j a_j
    f = EulerRational(Poly(terms, 2), dens)
    g = apply_euler_op(EulerOp(cs), f)
    before = _rational_expand(f, (4, 4))
    after = _rational_expand(g, (4, 4))
    for a in np.ndindex(5, 5):
        assert after[a] == (1 + cs[0] * a[0] + cs[1] * a[1]) * before[a]


def _rational_expand(f, bounds):
    # scale to integer numerator so expand() applies, then undo
    den = 1
    for c in f.numerator.terms.values():
        den = den * c.denominator // np.gcd(den, c.denominator)
    t = expand(EulerRational(f.numerator.scale(den), f.den_exps), bounds).entries
    return np.vectorize(lambda x: Fraction(x, den), otypes=[object])(t)


# -- the closed form ---------------------------------------------------

def test_sl4_golden():
    f = hilbert_series(sl4_cone())
    assert f.den_exps == (4, 5)
    assert f.numerator.terms == SL4_NUMERATOR


def test_sl3_closed_form():
    f = hilbert_series(sl3_cone())
    assert f.den_exps == (3, 3)
    assert f.numerator.terms == SL3_3W_NUMERATOR
    assert verify_equivalence(f, sl3_cone(), (6, 6)).passed


def test_sl3_printed_sign_is_inconsistent():
    printed = dict(SL3_3W_NUMERATOR)
    printed[(2, 2)] = 8
    report = verify_equivalence(EulerRational(Poly(printed, 2), (3, 3)), sl3_cone(), (2, 2))
    assert report.mismatches == [((2, 2), 343, 359)]


def test_a1_single_generator():
    f = hilbert_series(ConeSpec.of(["A1"], [(1,)]))
    assert f == EulerRational(Poly.one(1), (2,))


@pytest.mark.parametrize("types,gens", [
    (["A3"], [(1, 0, 1), (0, 1, 0)]),
    (["B2"], [(1, 1), (0, 2)]),
    (["G2"], [(1, 0), (0, 1)]),
    (["A1", "A2"], [(1, 0, 0), (0, 1, 1)]),
])
def test_den_exponent_law(types, gens):
    cone = ConeSpec.of(types, gens)
    f = hilbert_series(cone)
    for j, lam in enumerate(cone.generators):
        nonzero = sum(1 for a in cone.rs.positive_roots if operator_for_root(cone, a).coeffs[j])
        assert f.den_exps[j] == 1 + nonzero
    assert f.numerator.is_integral()


def test_root_order_independence():
    cone = ConeSpec.of(["C3"], [(1, 0, 1), (0, 2, 0)])
    roots = list(cone.rs.positive_roots)
    random.Random(7).shuffle(roots)
    assert hilbert_series(cone, roots) == hilbert_series(cone)


def test_root_order_must_be_permutation():
    cone = sl3_cone()
    with pytest.raises(DomainError):
        hilbert_series(cone, cone.rs.positive_roots[:2])


def test_generator_swap():
    a = hilbert_series(ConeSpec.of(["B3"], [(1, 0, 0), (0, 0, 1), (0, 1, 0)]))
    b = hilbert_series(ConeSpec.of(["B3"], [(0, 1, 0), (0, 0, 1), (1, 0, 0)]))
    assert b == a.permute_vars([2, 1, 0])


def test_zero_generator_splits_off():
    cone = ConeSpec.of(["A3"], [(0, 0, 0), (1, 0, 1), (0, 2, 0)])
    rest = hilbert_series(ConeSpec.of(["A3"], [(1, 0, 1), (0, 2, 0)]))
    f = hilbert_series(cone)
    lifted = Poly({(0,) + e: c for e, c in rest.numerator.items()}, 3)
    assert f == EulerRational(lifted, (1,) + rest.den_exps)


@pytest.mark.parametrize("types,lam", [(["A3"], (1, 0, 0)), (["A2"], (2, 0)), (["B2"], (0, 1)), (["G2"], (1, 0))])
def test_single_generator_series(types, lam):
    from weylgen import weyl_dim
    cone = ConeSpec.of(types, [lam])
    table = expand(hilbert_series(cone), (12,))
    assert [table[(n,)] for n in range(13)] == [weyl_dim(cone.rs, cone.point((n,))) for n in range(13)]


# -- specialization and reduction -------------------------------------

def test_specialize_sl4():
    u = specialize(hilbert_series(sl4_cone()), (1, 2))
    r = reduce_univariate(u)
    assert r.numerator == Poly.from_dense([1, 3, 6])
    assert r.one_minus_q_power() == 7
    assert str(r) == "(1+3q+6q^2)/(1-q)^7"


def test_specialize_sl3_diagonal():
    u = specialize(hilbert_series(sl3_cone()), (1, 1))
    assert u.numerator == Poly.from_dense([1, 14, 15, -22, -8])
    assert u.one_minus_q_power() == 6
    r = reduce_univariate(u)
    assert str(r) == "(1+15q+30q^2+8q^3)/(1-q)^5"


def test_specialize_identity():
    f = EulerRational(Poly.from_dense([1, 2]), (3,))
    u = specialize(f, (1,))
    assert u.numerator == f.numerator
    assert u.denominator == (1 - q()) ** 3


def test_specialize_rejects_bad_grading():
    f = hilbert_series(sl4_cone())
    with pytest.raises(DomainError):
        specialize(f, (1, 0))
    with pytest.raises(DimensionError):
        specialize(f, (1,))


def test_reduce_examples():
    r = reduce_univariate(UniRational(1 - q(2), (1 - q()) ** 2))
    assert (r.numerator, r.denominator) == (1 + q(), 1 - q())

    p = Poly.from_dense([1, 3, 6])
    r = reduce_univariate(UniRational(p * (1 + q()), (1 - q()) ** 7 * (1 - q(2))))
    assert r.numerator == p and r.one_minus_q_power() == 8

    already = UniRational(p, (1 - q()) ** 3)
    assert reduce_univariate(already) == already


def test_reduce_non_standard_denominator():
    r = reduce_univariate(UniRational(Poly.one(1), 1 - q(2)))
    assert r.one_minus_q_power() is None
    assert str(r) == "1/(1-q^2)"


def test_zero_denominator():
    with pytest.raises(DomainError):
        UniRational(Poly.one(1), Poly.zero(1))


def test_reduce_scales_back_to_unit_constant():
    r = reduce_univariate(UniRational(Poly.from_dense([2, 2]), Poly.from_dense([4, -4])))
    assert r.denominator == 1 - q()
    assert r.numerator == Poly.from_dense([Fraction(1, 2), Fraction(1, 2)])


# -- recursion ---------------------------------------------------------

def test_lemma_operators_n4():
    a, b = lemma_operators(4)
    assert a.coeffs == (0, 1)
    assert b.coeffs == (Fraction(2, 3), Fraction(2, 3))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_lemma_operators_come_from_roots(n):
    cone = ConeSpec.of([("A", n - 1)], [[2, 0] + [0] * (n - 3), [0, 2] + [0] * (n - 3)])
    tail2 = PositiveRoot((0,) + (1,) * (n - 2))
    full = PositiveRoot((1,) * (n - 1))
    a, b = lemma_operators(n)
    assert operator_for_root(cone, tail2) == a
    assert operator_for_root(cone, full) == b


def test_lemma_step_sl4():
    base = hilbert_series(sl3_2w())
    assert lemma_recursion_step(4, base) == hilbert_series(sl4_cone())


def test_lemma_step_sl5():
    f4 = hilbert_series(sl4_cone())
    direct = hilbert_series(ConeSpec.of(["A4"], [(2, 0, 0, 0), (0, 2, 0, 0)]))
    assert lemma_recursion_step(5, f4) == direct


def test_lemma_rejects_small_n():
    with pytest.raises(DomainError):
        lemma_recursion_step(3, hilbert_series(sl3_2w()))


def sl3_2w():
    return ConeSpec.of(["A2"], [(2, 0), (0, 2)])
