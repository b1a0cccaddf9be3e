import numpy as np
import pytest

from oracles import sl_dim
from weylgen import (
    ConeSpec,
    DimensionError,
    EulerRational,
    Poly,
    dimension_table,
    hilbert_series,
    verify_equivalence,
)


def test_a1_table():
    t = dimension_table(ConeSpec.of(["A1"], [(1,)]), (3,))
    assert list(t.entries) == [1, 2, 3, 4]


def test_zero_cone_table():
    t = dimension_table(ConeSpec.of(["B3"], [(0, 0, 0), (0, 0, 0)]), (2, 3))
    assert np.all(t.entries == 1)
    assert len(t) == 12


def test_sl3_entry():
    t = dimension_table(ConeSpec.of(["A2"], [(3, 0), (0, 3)]), (1, 1))
    # (a+1)(b+1)(a+b+2)/2 at a = b = 3
    assert t[1, 1] == 64
    assert t[1, 1] == sl_dim((3, 3))


def test_product_table_is_outer_product():
    left = ConeSpec.of(["A2"], [(1, 0), (1, 1)])
    right = ConeSpec.of(["G2"], [(0, 1)])
    both = ConeSpec.of(["A2", "G2"], [(1, 0, 0, 0), (1, 1, 0, 0), (0, 0, 0, 1)])
    t = dimension_table(both, (2, 2, 3)).entries
    outer = np.multiply.outer(dimension_table(left, (2, 2)).entries, dimension_table(right, (3,)).entries)
    assert np.all(t == outer)


def test_verify_pass():
    cone = ConeSpec.of(["A2"], [(3, 0), (0, 3)])
    r = verify_equivalence(hilbert_series(cone), cone, (4, 4))
    assert r.checked == 25 and r.passed
    assert str(r) == "25 checked, 0 mismatches"


def test_verify_detects_injected_fault():
    cone = ConeSpec.of(["A2"], [(3, 0), (0, 3)])
    f = hilbert_series(cone)
    bad = EulerRational(f.numerator + Poly.var(0, 2), f.den_exps)
    r = verify_equivalence(bad, cone, (4, 4))
    assert not r.passed
    assert r.mismatches[0][0] == (1, 0)


def test_verify_trivial_series_vs_nontrivial_cone():
    cone = ConeSpec.of(["A2"], [(1, 0), (0, 1)])
    r = verify_equivalence(EulerRational.geometric(2), cone, (2, 2))
    assert r.mismatches[0] == ((0, 1), 3, 1)


def test_verify_bounds_length():
    cone = ConeSpec.of(["A1"], [(1,)])
    with pytest.raises(DimensionError):
        verify_equivalence(hilbert_series(cone), cone, (2, 2))
