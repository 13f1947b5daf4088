from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_tnn import (
    EdreiSpec,
    EmptyWindow,
    InvalidSpec,
    LaurentWindow,
    OutOfWindow,
    edrei_coeffs,
    exp_factor_coeffs,
    reverse_series,
    shift_mul_z,
    window_add,
    window_mul,
    window_scale,
)

from oracles import convolve, exp_double_sum, geometric, poly_from_factors

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
positive = st.fractions(min_value=F(1, 4), max_value=8, max_denominator=4)


def coeff_list(w, lo=None, hi=None):
    lo = w.lo if lo is None else lo
    hi = w.hi if hi is None else hi
    return [w[n] for n in range(lo, hi + 1)]


@st.composite
def polys(draw, max_len=5):
    coeffs = draw(st.lists(fracs, min_size=1, max_size=max_len))
    lo = draw(st.integers(-3, 3))
    return LaurentWindow.polynomial(coeffs, lo)


@st.composite
def truncated(draw):
    w = draw(polys(max_len=6))
    return LaurentWindow(w.lo, w.hi, w.coeffs, draw(st.booleans()), draw(st.booleans()))


class TestWindowMul:
    def test_identity(self):
        w = LaurentWindow(0, 3, (1, 2, 3, 4), True, False)
        assert window_mul(LaurentWindow.polynomial([1]), w) == w

    def test_binomial(self):
        out = window_mul(LaurentWindow.polynomial([1, 1]), LaurentWindow.polynomial([1, 1]))
        assert (out.lo, out.hi, out.coeffs) == (0, 2, (1, 2, 1))
        assert out.is_complete

    def test_geometric_truncation(self):
        a = LaurentWindow.polynomial([1, F(1, 2)])
        b = LaurentWindow(0, 3, (1, F(1, 2), F(1, 4), F(1, 8)), True, False)
        out = window_mul(a, b)
        assert coeff_list(out, 0, 2) == [1, 1, F(1, 2)]
        assert out.exact_left and not out.exact_right
        # the window knows b_0..b_3, so c_3 is also determined
        assert out.hi == 3 and out[3] == F(1, 4)

    def test_empty_determined_range(self):
        left_infinite = LaurentWindow(0, 0, (1,), False, True)
        right_infinite = LaurentWindow(0, 0, (1,), True, False)
        with pytest.raises(EmptyWindow):
            window_mul(left_infinite, right_infinite)
        with pytest.raises(EmptyWindow):
            window_mul(LaurentWindow(0, 1, (1, 1)), LaurentWindow(0, 0, (1,)))
        assert window_mul(right_infinite, right_infinite).coeffs == (1,)

    @given(polys(), polys())
    def test_matches_convolution_oracle(self, a, b):
        expected = convolve(dict(a.items()), dict(b.items()))
        out = window_mul(a, b)
        for n in range(out.lo, out.hi + 1):
            assert out[n] == expected.get(n, 0)
        assert out.is_complete

    @given(truncated(), truncated())
    def test_commutative(self, a, b):
        try:
            ab = window_mul(a, b)
        except EmptyWindow:
            with pytest.raises(EmptyWindow):
                window_mul(b, a)
            return
        assert window_mul(b, a) == ab

    @given(truncated(), truncated(), truncated())
    @settings(max_examples=60)
    def test_associative_on_common_range(self, a, b, c):
        try:
            left = window_mul(window_mul(a, b), c)
            right = window_mul(a, window_mul(b, c))
        except EmptyWindow:
            return
        for n in range(max(left.lo, right.lo), min(left.hi, right.hi) + 1):
            assert left[n] == right[n]


class TestExpFactor:
    def test_taylor(self):
        w = exp_factor_coeffs(1, 0, -1, 2)
        assert w.coeffs == (0, 1, 1, F(1, 2))
        assert w.exact_left and not w.exact_right

    def test_trivial(self):
        w = exp_factor_coeffs(0, 0, -2, 2)
        assert w.coeffs == (0, 0, 1, 0, 0)
        assert w.is_complete

    def test_double_sum_truncated(self):
        w = exp_factor_coeffs(1, 1, 0, 0, trunc=2)
        assert w[0] == F(9, 4)
        assert 0 in w.approx

    def test_negative_rate(self):
        with pytest.raises(InvalidSpec):
            exp_factor_coeffs(-1, 0, 0, 1)

    @given(positive, positive, st.integers(-4, 4))
    @settings(max_examples=40)
    def test_double_sum_oracle(self, A, A0, n):
        assert exp_factor_coeffs(A, A0, n, n, trunc=10)[n] == exp_double_sum(A, A0, n, 10)

    @pytest.mark.parametrize("A,A0", [(1, 1), (2, F(1, 2)), (F(1, 3), 3)])
    def test_product_of_one_sided_factors_converges(self, A, A0):
        limit = exp_double_sum(A, A0, 1, 80)
        gaps = []
        for trunc in (4, 8, 16):
            right = LaurentWindow.polynomial(exp_factor_coeffs(A, 0, 0, trunc + 1).coeffs)
            left = LaurentWindow.polynomial(exp_factor_coeffs(0, A0, -trunc, 0).coeffs, lo=-trunc)
            product = window_mul(right, left)[1]
            assert product == exp_factor_coeffs(A, A0, 1, 1, trunc=trunc)[1]
            gaps.append(abs(product - limit))
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < F(1, 10**6)


@st.composite
def polynomial_specs(draw):
    return EdreiSpec(
        C=draw(positive),
        j=draw(st.integers(-2, 2)),
        zeros_pos=draw(st.lists(positive, max_size=3)),
        zeros_neg=draw(st.lists(positive, max_size=3)),
    )


@st.composite
def edrei_specs(draw):
    spec = draw(polynomial_specs())
    return EdreiSpec(
        C=spec.C, j=spec.j, zeros_pos=spec.zeros_pos, zeros_neg=spec.zeros_neg,
        A=draw(st.sampled_from([0, F(1, 2), 1])),
        poles_pos=draw(st.lists(st.fractions(min_value=2, max_value=9, max_denominator=2), max_size=2)),
    )


class TestEdrei:
    def test_constant(self):
        w = edrei_coeffs(EdreiSpec(), -2, 2)
        assert w.coeffs == (0, 0, 1, 0, 0)
        assert w.is_complete

    def test_single_zero(self):
        w = edrei_coeffs(EdreiSpec(zeros_pos=[1]), 0, 1)
        assert w.coeffs == (1, 1)
        assert w.is_complete

    def test_geometric_pole(self):
        w = edrei_coeffs(EdreiSpec(poles_pos=[2]), 0, 3)
        assert w.coeffs == (1, F(1, 2), F(1, 4), F(1, 8))
        assert w.exact_left and not w.exact_right

    def test_geometric_oracle(self):
        w = edrei_coeffs(EdreiSpec(poles_pos=[3]), 0, 9)
        assert dict(w.items()) == geometric(3, 10)

    def test_left_pole(self):
        w = edrei_coeffs(EdreiSpec(poles_neg=[2]), -3, 0)
        assert w.coeffs == (F(1, 8), F(1, 4), F(1, 2), 1)
        assert w.exact_right and not w.exact_left

    @pytest.mark.parametrize("bad", [
        {"C": -1}, {"zeros_pos": [0]}, {"zeros_neg": [-1]}, {"poles_pos": [0]}, {"A": -1},
    ])
    def test_invalid(self, bad):
        with pytest.raises(InvalidSpec):
            edrei_coeffs(EdreiSpec(**bad), 0, 2)

    def test_two_sided_is_approximate(self):
        w = edrei_coeffs(EdreiSpec(poles_pos=[2], poles_neg=[3]), -1, 1, trunc=6)
        assert not w.exact_left and not w.exact_right
        assert w.approx == frozenset({-1, 0, 1})

    def test_two_sided_converges(self):
        # (1 - z/2)^-1 (1 - 1/(3z))^-1: c_0 = sum 1/6^k = 6/5
        coarse = edrei_coeffs(EdreiSpec(poles_pos=[2], poles_neg=[3]), 0, 0, trunc=5)[0]
        fine = edrei_coeffs(EdreiSpec(poles_pos=[2], poles_neg=[3]), 0, 0, trunc=20)[0]
        assert abs(fine - F(6, 5)) < abs(coarse - F(6, 5)) < F(1, 1000)

    @given(polynomial_specs(), st.integers(0, 30))
    @settings(max_examples=60)
    def test_polynomial_matches_factor_product(self, spec, trunc):
        expected = poly_from_factors(spec.C, spec.j, spec.zeros_pos, spec.zeros_neg)
        w = edrei_coeffs(spec, spec.j - 5, spec.j + 5, trunc)
        assert w.is_complete
        for n in range(w.lo, w.hi + 1):
            assert w[n] == expected.get(n, 0)

    @given(edrei_specs())
    @settings(max_examples=60)
    def test_coefficients_nonnegative(self, spec):
        w = edrei_coeffs(spec, spec.j - 4, spec.j + 8)
        assert all(c >= 0 for c in w.coeffs)

    @given(edrei_specs())
    @settings(max_examples=40)
    def test_pole_factor_is_geometric_product(self, spec):
        base = EdreiSpec(C=spec.C, j=spec.j, zeros_pos=spec.zeros_pos, zeros_neg=spec.zeros_neg,
                         A=spec.A)
        w = edrei_coeffs(spec, spec.j - 4, spec.j + 6)
        expected = dict(edrei_coeffs(base, spec.j - 4, spec.j + 6).items())
        for delta in spec.poles_pos:
            expected = convolve(expected, geometric(delta, 12))
        for n in range(w.lo, w.hi + 1):
            assert w[n] == expected.get(n, 0)


class TestReverseShift:
    def test_reverse_symmetric(self):
        assert reverse_series(LaurentWindow.polynomial([1])) == LaurentWindow.polynomial([1])

    def test_reverse_binomial(self):
        w = reverse_series(LaurentWindow.polynomial([1, 1]))
        assert (w.lo, w.hi, w.coeffs) == (-1, 0, (1, 1))

    def test_reverse_geometric(self):
        w = reverse_series(edrei_coeffs(EdreiSpec(poles_pos=[2]), 0, 2))
        assert (w[0], w[-1], w[-2]) == (1, F(1, 2), F(1, 4))
        assert w.exact_right and not w.exact_left

    @given(truncated())
    def test_reverse_involution(self, w):
        assert reverse_series(reverse_series(w)) == w

    def test_shift_identity(self):
        w = LaurentWindow(0, 2, (1, 2, 3), True, False)
        assert shift_mul_z(w, 0, 1) == w

    def test_shift_binomial(self):
        w = shift_mul_z(LaurentWindow.polynomial([1, 1]), 1)
        assert (w.lo, w.hi, w.coeffs) == (1, 2, (1, 1))

    def test_shift_scaled(self):
        w = shift_mul_z(LaurentWindow.polynomial([1, F(1, 2)]), -1, 2)
        assert (w.lo, w.hi, w.coeffs) == (-1, 0, (2, 1))

    @given(truncated(), st.integers(-4, 4), fracs)
    def test_shift_is_multiplication_by_monomial(self, w, k, c):
        if c == 0:
            assert shift_mul_z(w, k, c).is_zero_series()
            return
        shifted = shift_mul_z(w, k, c)
        product = window_mul(LaurentWindow.polynomial([c], lo=k), w)
        for n in range(w.lo + k - 3, w.hi + k + 4):
            assert shifted.knows(n) == product.knows(n)
            if shifted.knows(n):
                assert shifted[n] == product[n]


class TestWindowBasics:
    def test_out_of_window(self):
        w = LaurentWindow(0, 1, (1, 1), True, False)
        assert w[-3] == 0
        with pytest.raises(OutOfWindow) as info:
            w.coeff(2, "p")
        assert info.value.exponent == 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            LaurentWindow(0, 2, (1, 2))

    def test_empty(self):
        with pytest.raises(EmptyWindow):
            LaurentWindow(1, 0, ())

    def test_canonical_fractions(self):
        w = LaurentWindow.polynomial(["2/4", 3])
        assert w.coeffs == (F(1, 2), F(3))
        assert w.coeffs[0].denominator == 2

    @given(truncated(), truncated())
    def test_add_then_scale(self, a, b):
        try:
            s = window_add(a, b)
        except EmptyWindow:
            return
        doubled = window_scale(s, 2)
        for n in range(s.lo, s.hi + 1):
            assert doubled[n] == 2 * (a[n] + b[n])

    def test_trimmed(self):
        w = LaurentWindow(-2, 3, (0, 0, 1, 2, 0, 0), True, True).trimmed()
        assert (w.lo, w.hi, w.coeffs) == (0, 1, (1, 2))
