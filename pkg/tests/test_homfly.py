"""Rosso-Jones and cut-and-join routes to the partition function."""

import pytest

from knotfermion.errors import CapTooSmall
from knotfermion.homfly import (cutjoin_apply, homfly_extended,
                                ov_coefficient_cutjoin,
                                ov_coefficient_rossojones, topological_locus)
from knotfermion.knot import AH, KnotParams
from knotfermion.laurent import LaurentPoly
from knotfermion.partitions import (PowerSumPoly, partitions_of,
                                    schur_in_power_sums, kappa, weight)
from knotfermion.ratio import QQ
from knotfermion.series import TSeries, exp_linear


K11 = KnotParams(1, 1)
K23 = KnotParams(2, 3)


class TestKnotParams:
    def test_gamma(self):
        assert KnotParams(1, 5).gamma == 0
        assert KnotParams(2, 3).gamma == 1
        assert KnotParams(3, 2).gamma == 1
        assert KnotParams(5, 2).gamma == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            KnotParams(2, 4)
        with pytest.raises(ValueError):
            KnotParams(0, 1)

    def test_a_powers(self):
        K = KnotParams(2, 3)
        assert K.A_pow(K.b + 1) == LaurentPoly.monomial(AH, (5,))
        with pytest.raises(ValueError):
            K.A_pow(QQ(1, 3))


class TestTopologicalLocus:
    def test_residue_coefficient(self):
        # 1/zeta(u/b) = b/u + O(u), so [u^-1] p*_1 = b (A - A^{-1})
        K = K23
        p1 = topological_locus(K, 1, 5)
        assert p1.coeff(-1) == K.A_diff(1) * K.b

    def test_antisymmetry_under_A_inversion(self):
        K = K23
        for i in (1, 2, 3):
            p = topological_locus(K, i, 6)
            flipped = p.map_coeffs(
                lambda co: LaurentPoly(AH, {(-e,): c
                                            for (e,), c in co.c.items()}))
            assert flipped.same_upto(-p)

    def test_composition_matches_definition(self):
        from knotfermion.series import zeta_series
        K = K23
        p2 = topological_locus(K, 2, 6)
        direct = zeta_series(QQ(2) / K.b, 8).inverse().scale(K.A_diff(2))
        assert p2.same_upto(direct, cap=6)


class TestHomflyExtended:
    def test_trivial_knot_single_box(self):
        H = homfly_extended(K11, (1,), 4)
        # A * s_1(p) = A * p_1
        assert set(H.terms) == {(1,)}
        co = H.terms[(1,)]
        assert co.coeff(0) == LaurentPoly.monomial(AH, (1,))
        assert co.coeff(1) == 0

    def test_23_single_box_frozen(self):
        # A^3 (q^3 s_2 - q^-3 s_11) with q^{+-3} = exp(+-u)
        H = homfly_extended(K23, (1,), 6)
        a3 = K23.A_pow(3)
        ep = exp_linear(1, 6).scale(a3)
        em = exp_linear(-1, 6).scale(-a3)
        expected = (schur_in_power_sums((2,)).scale(ep)
                    + schur_in_power_sums((1, 1)).scale(em))
        assert set(H.terms) == set(expected.terms)
        for sigma, co in H.terms.items():
            assert co.same_upto(expected.terms[sigma])

    def test_grading(self):
        for R in partitions_of(2):
            H = homfly_extended(K23, R, 3)
            assert all(weight(sigma) == K23.Q * weight(R)
                       for sigma in H.terms)


class TestCutJoin:
    def test_p1_annihilated(self):
        assert not cutjoin_apply(PowerSumPoly.monomial((1,), 1))

    def test_p2_splits(self):
        out = cutjoin_apply(PowerSumPoly.monomial((2,), 1))
        assert out == PowerSumPoly.monomial((1, 1), 1)

    def test_p11_joins(self):
        out = cutjoin_apply(PowerSumPoly.monomial((1, 1), 1))
        assert out == PowerSumPoly.monomial((2,), 1)

    def test_schur_eigenfunctions_weight_up_to_6(self):
        for n in range(1, 7):
            for R in partitions_of(n):
                s = schur_in_power_sums(R)
                assert cutjoin_apply(s) == s.scale(kappa(R))


class TestOVCoefficientRoutes:
    def test_empty_color(self):
        assert ov_coefficient_rossojones(K23, (), 3).value.coeff(0) == 1

    def test_K1_closed_form(self):
        # K_(1) = A^b (A - A^{-1}) / zeta(u Q / P)
        from knotfermion.series import zeta_series
        K = K23
        val = ov_coefficient_rossojones(K, (1,), 4).value
        closed = zeta_series(1 / K.b, 8).inverse().scale(
            K.A_pow(K.b) * K.A_diff(1))
        assert val.same_upto(closed, cap=4)
        assert val.coeff(-1) == K.A_diff(1) * K.A_pow(K.b) * K.b

    def test_cap_guard(self):
        with pytest.raises(CapTooSmall):
            ov_coefficient_rossojones(K23, (1,), 0)

    def test_divisible_path_equals_extended_path(self):
        from knotfermion.homfly import _ov_value_extended
        for K in (K23, KnotParams(3, 2)):
            for mu in [(K.Q,), (2 * K.Q,), (K.Q, K.Q)]:
                rj = ov_coefficient_rossojones(K, mu, 4).value
                ext = _ov_value_extended(K, tuple(sorted(mu, reverse=True)),
                                         4 + sum(mu) + 2).truncate(4)
                assert rj.same_upto(ext, cap=4)

    def test_two_routes_agree_small(self):
        for K in (K11, K23):
            for mu in [(1,), (2,), (2, 1), (2, 2), (3, 1)]:
                rj = ov_coefficient_rossojones(K, mu, 4).value
                cj = ov_coefficient_cutjoin(K, mu, 4).value
                assert rj.same_upto(cj, cap=4), (K, mu)

    def test_cutjoin_seed_survives_at_lowest_order(self):
        # operator applications only reach u^{j - l(sigma)} > -|mu| for
        # j >= 1 and mu = (1, 1), so the deepest pole coefficient is the
        # seed A^{2b} p*_1 p*_1 alone
        K = K23
        cj = ov_coefficient_cutjoin(K, (1, 1), 1).value
        p1 = topological_locus(K, 1, 6)
        assert cj.coeff(-2) == (p1 * p1).coeff(-2) * K.A_pow(2 * K.b)

    def test_parity(self):
        # u-exponents of K_mu are congruent to len(mu) mod 2
        for mu in [(1,), (2,), (2, 1), (1, 1)]:
            val = ov_coefficient_rossojones(K23, mu, 5).value
            n = len(mu)
            assert all((e - n) % 2 == 0 for e in val.c), (mu, val.c.keys())
