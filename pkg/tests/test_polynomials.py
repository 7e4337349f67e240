import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from shufflepeak.enumeration import gf_abs_signed
from shufflepeak.paths import ClassParams
from shufflepeak.polynomials import (
    IntPoly,
    ShiftedCoeffs,
    X,
    X_PLUS_1,
    balanced_loop_shifted,
    bin_lower,
    bin_lower_shifted,
    bin_upper,
    bin_upper_shifted,
    binom,
    from_shifted_basis,
    is_toggle_buildable,
    is_x_plus_1_positive,
    to_shifted_basis,
    toggle_basis_decompose,
    toggle_basis_element,
)

coeff_lists = st.lists(st.integers(-10**6, 10**6), max_size=21)

QUADRATIC = IntPoly([15, 12, 1])


def subset_tally(n, key):
    counts = {}
    for size in range(n + 1):
        counts[key(size)] = counts.get(key(size), 0) + comb(n, size)
    return IntPoly.from_counts(counts)


def test_binom_out_of_range():
    assert binom(5, 2) == 10
    assert binom(3, 4) == 0 and binom(3, -1) == 0 and binom(-1, 0) == 0


def test_intpoly_basics():
    assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
    assert IntPoly() == IntPoly([0]) and IntPoly().degree == -1
    assert QUADRATIC.degree == 2
    assert str(QUADRATIC) == "x^2 + 12x + 15"
    assert QUADRATIC(-1) == 4
    assert (X + 1) ** 3 == IntPoly([1, 3, 3, 1])
    assert X_PLUS_1 * X_PLUS_1 - X * X == IntPoly([1, 2])
    assert IntPoly.from_counts({0: 4, 1: 2}) == IntPoly([4, 2])


def test_intpoly_is_hashable_and_immutable():
    assert len({IntPoly([1, 2]), IntPoly([1, 2, 0])}) == 1


@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_intpoly_ring_laws(a, b, x):
    p, q = IntPoly(a), IntPoly(b)
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - p) == IntPoly()


def test_taylor_shift_examples():
    assert to_shifted_basis(QUADRATIC).coeffs == (4, 10, 1)
    assert to_shifted_basis(IntPoly([4, 2])).coeffs == (2, 2)
    for n in range(8):
        assert to_shifted_basis(X_PLUS_1 ** n).coeffs == (0,) * n + (1,)
    assert to_shifted_basis(IntPoly()).coeffs == ()


@given(coeff_lists)
def test_taylor_shift_round_trip(a):
    p = IntPoly(a)
    c = to_shifted_basis(p)
    assert from_shifted_basis(c) == p
    assert c.to_poly() == p


@given(st.lists(st.integers(-50, 50), max_size=10))
def test_taylor_shift_matches_binomial_expansion(c):
    # independent route: expand sum c_i (x+1)^i coefficient by coefficient
    deg = len(c)
    coeffs = [sum(c[i] * comb(i, j) for i in range(j, deg)) for j in range(deg)]
    assert to_shifted_basis(IntPoly(coeffs)) == ShiftedCoeffs(tuple(c))


def test_positivity():
    assert is_x_plus_1_positive(QUADRATIC)
    assert not is_x_plus_1_positive(X)
    assert is_x_plus_1_positive(IntPoly())
    assert is_x_plus_1_positive(IntPoly([2, 3, 1]))
    # 5x^2 + x + 2 = 5(x+1)^2 - 9(x+1) + 6
    assert not is_x_plus_1_positive(IntPoly([2, 1, 5]))


def test_bin_lower_examples():
    assert bin_lower(1, 2) == IntPoly([2, 1])
    assert bin_lower_shifted(1, 2).coeffs == (1, 1)
    for n in range(8):
        assert bin_lower(0, n) == X_PLUS_1 ** n
    assert bin_lower(5, 3) == IntPoly()


def test_bin_lower_shifted_matches_taylor_shift():
    for k in range(1, 11):
        for n in range(11):
            assert bin_lower_shifted(k, n) == to_shifted_basis(bin_lower(k, n)), (k, n)


def test_bin_lower_matches_subset_tally():
    for k in range(6):
        for n in range(k, 8):
            brute = {}
            for s in range(k, n + 1):
                brute[s - k] = brute.get(s - k, 0) + comb(n, s)
            assert bin_lower(k, n) == IntPoly.from_counts(brute)


def test_bin_upper_examples():
    assert bin_upper(1, 2) == IntPoly([2, 2])
    assert bin_upper(1, 1) == X_PLUS_1
    assert bin_upper(2, 3) == IntPoly([3, 4, 1])
    assert bin_upper_shifted(1, 2).coeffs == (0, 2)
    with pytest.raises(ValueError):
        bin_upper_shifted(0, 3)
    with pytest.raises(ValueError):
        bin_upper(4, 3)


def test_bin_upper_matches_subset_tally():
    for n in range(9):
        for k in range(n + 1):
            assert bin_upper(k, n) == subset_tally(n, lambda s: abs(s - k))


def test_bin_upper_shifted_matches_taylor_shift():
    for n in range(1, 11):
        for k in range(1, n + 1):
            c = bin_upper_shifted(k, n)
            assert c == to_shifted_basis(bin_upper(k, n)), (k, n)
            assert c[0] == 0


def test_double_counting_identity():
    for n in range(1, 11):
        for k in range(1, n + 1):
            assert bin_lower(k, n) + bin_lower(n - k, n) == bin_upper(k, n) + comb(n, k)


def test_doubling_identity():
    for j in range(1, 9):
        assert bin_upper(j, 2 * j - 1) * 2 == bin_upper(j, 2 * j)


def test_balanced_loop_examples():
    assert balanced_loop_shifted(1, 1).coeffs == (2, 2)
    assert balanced_loop_shifted(1, 1).to_poly() == IntPoly([4, 2])
    for m in range(5):
        assert balanced_loop_shifted(m, 0).coeffs == (1,)


def test_balanced_loop_matches_brute_force():
    for m in range(5):
        for n in range(5):
            assert balanced_loop_shifted(m, n) == to_shifted_basis(gf_abs_signed(ClassParams(m, m, n, n))), (m, n)
            assert balanced_loop_shifted(m, n).is_nonnegative()
            assert balanced_loop_shifted(m, n)[0] == comb(m + n, n)


def test_toggle_basis():
    assert toggle_basis_element(0) == IntPoly([1])
    assert toggle_basis_element(1) == X_PLUS_1
    for j in range(8):
        e = toggle_basis_element(j)
        assert e.degree == j and e[j] == 1
    assert toggle_basis_decompose(X_PLUS_1) == (0, 1)
    assert toggle_basis_decompose(IntPoly([1])) == (1,)
    assert toggle_basis_decompose(IntPoly()) == ()


def test_quadratic_decomposition():
    assert toggle_basis_decompose(QUADRATIC) == (4, 8, 1)
    assert QUADRATIC == toggle_basis_element(2) + toggle_basis_element(1) * 8 + 4
    assert is_toggle_buildable(QUADRATIC)


def test_not_buildable_example():
    # x + 1 - 1 = x needs a negative constant
    assert toggle_basis_decompose(X) == (-1, 1)
    assert not is_toggle_buildable(X)


@given(st.lists(st.integers(-100, 100), max_size=9))
def test_decompose_round_trip(a):
    p = sum((toggle_basis_element(j) * c for j, c in enumerate(a)), IntPoly())
    got = toggle_basis_decompose(p)
    assert got == tuple(a[: len(got)]) and all(c == 0 for c in a[len(got):])


@given(coeff_lists, coeff_lists)
def test_decompose_is_linear(a, b):
    p, q = IntPoly(a[:9]), IntPoly(b[:9])
    da, db, ds = (toggle_basis_decompose(x) for x in (p, q, p + q))
    width = max(len(da), len(db), len(ds))
    pad = lambda t: t + (0,) * (width - len(t))
    assert pad(ds) == tuple(x + y for x, y in zip(pad(da), pad(db)))


def test_buildable_implies_positive():
    # each basis element is (x+1)-positive, so buildable polynomials are too
    for j in range(10):
        assert is_x_plus_1_positive(toggle_basis_element(j))
    for coeffs in itertools.product(range(3), repeat=4):
        p = sum((toggle_basis_element(j) * c for j, c in enumerate(coeffs)), IntPoly())
        assert is_x_plus_1_positive(p)
