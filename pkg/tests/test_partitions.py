"""Partitions, characters, Schur/power-sum transitions, Adams, kappa."""

import itertools

import pytest

from knotfermion.errors import WeightMismatch
from knotfermion.laurent import LaurentPoly
from knotfermion.partitions import (PowerSumPoly, adams_coefficients, kappa,
                                    mn_character, partitions_of,
                                    schur_in_power_sums, set_partitions,
                                    transpose, weight, z_aut)
from knotfermion.ratio import QQ


class TestPartitionsOf:
    def test_empty(self):
        assert partitions_of(0) == ((),)

    def test_counts(self):
        # p(4) = 5 and p(10) = 42 by enumeration
        assert len(partitions_of(4)) == 5
        assert len(partitions_of(10)) == 42

    def test_sorted_dedup(self):
        ps = partitions_of(6)
        assert list(ps) == sorted(set(ps))
        assert all(weight(p) == 6 for p in ps)


class TestCharacters:
    def test_trivial(self):
        assert mn_character((1,), (1,)) == 1

    def test_s2(self):
        assert mn_character((2,), (2,)) == 1
        assert mn_character((1, 1), (2,)) == -1

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            mn_character((2,), (1,))

    def test_column_orthogonality_weight5(self):
        for sigma in partitions_of(5):
            for tau in partitions_of(5):
                s = sum(mn_character(lam, sigma) * mn_character(lam, tau)
                        for lam in partitions_of(5))
                assert s == (z_aut(sigma) if sigma == tau else 0)

    def test_dimension_column(self):
        # chi^lam_{1^n} equals the number of standard tableaux; spot check
        assert mn_character((2, 1), (1, 1, 1)) == 2
        assert mn_character((3, 2), (1,) * 5) == 5


def brute_schur(R, nvars):
    """Schur polynomial via the Jacobi bialternant over small exponents."""
    # s_R(x) = det(x_i^{R_j + n - j}) / det(x_i^{n - j}) evaluated
    # symbolically is overkill here; instead compare monomial expansions of
    # the power-sum form against the combinatorial SSYT definition.
    from itertools import product
    n = nvars
    R = tuple(R) + (0,) * (n - len(R))

    def ssyt(shape):
        rows = [r for r in shape if r]
        if not rows:
            yield ()
            return
        # generate fillings with entries 1..n, rows weakly, cols strictly
        cells = [(i, j) for i, r in enumerate(rows) for j in range(r)]
        def rec(filling):
            if len(filling) == len(cells):
                yield tuple(filling)
                return
            i, j = cells[len(filling)]
            lo = 1
            if j > 0:
                lo = max(lo, filling[cells.index((i, j - 1))])
            if i > 0:
                lo = max(lo, filling[cells.index((i - 1, j))] + 1)
            for v in range(lo, n + 1):
                yield from rec(filling + [v])
        yield from rec([])

    counts = {}
    for f in ssyt(R):
        mono = [0] * n
        for v in f:
            mono[v - 1] += 1
        counts[tuple(mono)] = counts.get(tuple(mono), 0) + 1
    return counts


class TestSchur:
    def test_single_box(self):
        assert schur_in_power_sums((1,)) == PowerSumPoly.monomial((1,), 1)

    def test_weight_two(self):
        s2 = schur_in_power_sums((2,))
        s11 = schur_in_power_sums((1, 1))
        assert s2.coeff((1, 1)) == QQ(1, 2) and s2.coeff((2,)) == QQ(1, 2)
        assert s11.coeff((1, 1)) == QQ(1, 2) and s11.coeff((2,)) == QQ(-1, 2)

    def test_21_against_ssyt_oracle(self):
        # evaluate the power-sum form at p_i = x1^i + x2^i + x3^i and compare
        # against the tableau-generated monomial expansion
        R = (2, 1)
        nvars = 3
        varnames = ("x1", "x2", "x3")
        def power_sum(i):
            return sum((LaurentPoly.gen(varnames, v) ** i for v in varnames),
                       LaurentPoly.zero(varnames))
        poly = LaurentPoly.zero(varnames)
        for sigma, co in schur_in_power_sums(R).terms.items():
            term = LaurentPoly.const(varnames, co)
            for part in sigma:
                term = term * power_sum(part)
            poly = poly + term
        expected = LaurentPoly(varnames, {k: QQ(v) for k, v in
                                          brute_schur(R, nvars).items()})
        assert poly == expected


class TestAdams:
    def test_identity_operation(self):
        assert adams_coefficients((2, 1), 1) == {(2, 1): 1}

    def test_box_q2(self):
        assert adams_coefficients((1,), 2) == {(2,): 1, (1, 1): -1}

    def test_box_q3(self):
        assert adams_coefficients((1,), 3) == {(3,): 1, (2, 1): -1,
                                               (1, 1, 1): 1}

    def test_plethysm_identity(self):
        # sum_R1 c^{R1}_R s_R1(p) = s_R(p_j -> p_{jQ}) as power-sum polys
        for Q in (2, 3):
            for n in (1, 2, 3):
                for R in partitions_of(n):
                    lhs = PowerSumPoly()
                    for R1, c in adams_coefficients(R, Q).items():
                        lhs = lhs + schur_in_power_sums(R1).scale(c)
                    rhs = PowerSumPoly(
                        {tuple(Q * p for p in sigma): co
                         for sigma, co in
                         schur_in_power_sums(R).terms.items()})
                    assert lhs == rhs


class TestKappa:
    def test_values(self):
        assert kappa((1,)) == 0
        assert kappa((2,)) == 1
        assert kappa((1, 1)) == -1
        assert kappa((3, 1)) == 2

    def test_transpose_antisymmetry(self):
        for n in range(1, 9):
            for lam in partitions_of(n):
                assert kappa(transpose(lam)) == -kappa(lam)


class TestSetPartitions:
    def test_bell_numbers(self):
        for n, bell in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)]:
            assert len(list(set_partitions(list(range(n))))) == bell
