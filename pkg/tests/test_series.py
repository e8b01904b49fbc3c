"""Exact series kernel: frozen small values, inverses, reversion, parity."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotfermion.errors import (BadValuation, NonInvertibleLeadingTerm,
                                TruncationError)
from knotfermion.laurent import LaurentPoly
from knotfermion.ratio import QQ
from knotfermion.series import (TSeries, binomial_series, compose,
                                exp_series, lagrange_revert, log1p_series,
                                series_inverse, zeta_series)

AH = ("ah",)


def ts(coeffs, cap=None, var="u"):
    return TSeries(var, {e: QQ(*c) if isinstance(c, tuple) else QQ(c)
                         for e, c in coeffs.items()}, cap)


class TestZeta:
    def test_zero_argument(self):
        assert zeta_series(0, 6) == TSeries.zero("u", 6)

    def test_expansion_order_four(self):
        # hand expansion of e^{u/2} - e^{-u/2}
        assert zeta_series(1, 4) == ts({1: 1, 3: (1, 24)}, cap=4)

    def test_odd_function(self):
        c = QQ(3, 2)
        assert zeta_series(-c, 9) == -zeta_series(c, 9)
        assert all(e % 2 == 1 for e in zeta_series(c, 12).c)

    def test_linear_coefficient_is_c(self):
        assert zeta_series(QQ(7, 5), 3).coeff(1) == QQ(7, 5)


class TestInverse:
    def test_identity(self):
        one = TSeries.const("u", 1, cap=5)
        assert series_inverse(one).same_upto(one)

    def test_zeta_inverse_frozen(self):
        # long division against u + u^3/24: 1/zeta(u) = u^-1 - u/24 + O(u^3)
        inv = series_inverse(zeta_series(1, 4))
        assert inv.coeff(-1) == 1
        assert inv.coeff(0) == 0
        assert inv.coeff(1) == QQ(-1, 24)
        assert inv.cap == 2

    def test_valuation_two(self):
        s = ts({2: 1, 3: 2, 5: (1, 3)}, cap=8)
        inv = s.inverse()
        assert inv.valuation() == -2
        assert (s * inv).same_upto(TSeries.const("u", 1))

    def test_non_invertible_leading(self):
        lead = LaurentPoly(AH, {(0,): 1, (1,): 1})
        s = TSeries("u", {0: lead}, cap=4)
        with pytest.raises(NonInvertibleLeadingTerm):
            s.inverse()

    def test_monomial_leading_ok(self):
        lead = LaurentPoly(AH, {(2,): QQ(3)})
        s = TSeries("u", {1: lead, 2: LaurentPoly(AH, {(0,): 1})}, cap=6)
        assert (s * s.inverse()).same_upto(TSeries.const("u", 1))

    @given(st.lists(st.tuples(st.integers(-9, 9), st.integers(1, 9)),
                    min_size=1, max_size=5),
           st.integers(0, 3))
    @settings(max_examples=200, deadline=None)
    def test_two_sided_inverse_randomized(self, coeffs, val):
        c = {val: QQ(1)}
        for i, (p, q) in enumerate(coeffs):
            if p:
                c[val + 1 + i] = QQ(p, q)
        s = TSeries("u", c, cap=val + 8)
        inv = s.inverse()
        one = TSeries.const("u", 1)
        assert (s * inv).same_upto(one)
        assert (inv * s).same_upto(one)


class TestBinomial:
    def test_exponent_zero(self):
        assert binomial_series(QQ(2), 0, 5) == TSeries.const("U", 1, cap=6)

    def test_polynomial_case(self):
        ahat = LaurentPoly.gen(AH, "ah")
        s = binomial_series(ahat, 1, 4)
        assert s.coeff(0) == 1
        assert s.coeff(1) == -ahat
        assert s.coeff(2) == 0

    def test_sqrt_frozen(self):
        # binom(1/2, k) by hand: 1 - U/2 - U^2/8 - ...
        s = binomial_series(QQ(1), QQ(1, 2), 3)
        assert s.coeff(0) == 1
        assert s.coeff(1) == QQ(-1, 2)
        assert s.coeff(2) == QQ(-1, 8)
        assert s.coeff(3) == QQ(-1, 16)

    def test_product_of_opposite_exponents(self):
        b = QQ(3, 2)
        s = binomial_series(QQ(2), b, 6) * binomial_series(QQ(2), -b, 6)
        assert s.same_upto(TSeries.const("U", 1), cap=7)


class TestReversion:
    def test_identity(self):
        s = TSeries("U", {1: QQ(1)}, cap=8)
        r = lagrange_revert(s, 6)
        assert r == TSeries("U", {1: QQ(1)}, cap=7)

    def test_catalan_frozen(self):
        s = TSeries("U", {1: QQ(1), 2: QQ(1)}, cap=8)
        r = lagrange_revert(s, 5)
        # reversion of U + U^2: signed Catalan numbers
        assert [r.coeff(k) for k in range(1, 6)] == [1, -1, 2, -5, 14]
        assert compose(s, r).same_upto(TSeries("U", {1: QQ(1)}, cap=6))

    def test_round_trip_both_ways(self):
        s = ts({1: 2, 2: (1, 3), 4: -5}, cap=9, var="U")
        r = lagrange_revert(s, 7)
        ident = TSeries("U", {1: QQ(1)})
        assert compose(s, r).same_upto(ident, cap=8)
        assert compose(r, s).same_upto(ident, cap=8)

    def test_bad_valuation(self):
        with pytest.raises(BadValuation):
            lagrange_revert(ts({0: 1, 1: 1}, cap=5), 3)
        with pytest.raises(BadValuation):
            lagrange_revert(ts({2: 1}, cap=5), 3)


class TestExpLog:
    def test_exp_log_round_trip(self):
        s = ts({1: (1, 2), 3: -2}, cap=9)
        e = exp_series(s)
        assert log1p_series(e - 1).same_upto(s)

    def test_log_of_product(self):
        a = ts({1: 1, 2: 1}, cap=8)
        b = ts({1: -3, 4: (2, 7)}, cap=8)
        lhs = log1p_series((1 + a) * (1 + b) - 1)
        rhs = log1p_series(a) + log1p_series(b)
        assert lhs.same_upto(rhs)


class TestCaps:
    def test_coeff_beyond_cap_raises(self):
        s = ts({0: 1}, cap=3)
        with pytest.raises(TruncationError):
            s.coeff(3)

    def test_mixed_cap_addition_truncates(self):
        a = ts({0: 1, 4: 1}, cap=6)
        b = ts({1: 1}, cap=3)
        assert (a + b).cap == 3
        assert 4 not in (a + b).c

    def test_product_window(self):
        a = ts({-1: 1}, cap=2)   # known on [-1, 2)
        b = ts({-2: 1}, cap=5)   # known on [-2, 5)
        assert (a * b).cap == 0  # honest window: [-3, min(-1+5, -2+2)) = 0

    def test_ring_axioms_randomized(self):
        import random
        rng = random.Random(7)
        one = TSeries.const("u", 1)
        for _ in range(200):
            def rand_series():
                cap = rng.randint(3, 7)
                c = {e: QQ(rng.randint(-5, 5), rng.randint(1, 4))
                     for e in range(rng.randint(-2, 0), cap)}
                return TSeries("u", c, cap)
            x, y, z = rand_series(), rand_series(), rand_series()
            assert ((x * y) * z).same_upto(x * (y * z))
            assert (x * (y + z)).same_upto(x * y + x * z)
            assert (x * one).same_upto(x)
