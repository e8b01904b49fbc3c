"""Colored HOMFLY-PT of torus knots in spectral framing, two of the routes.

The Rosso-Jones route expands colors through Adams coefficients and framing
exponentials; the cut-and-join route applies a truncated operator
exponential of the second cut-and-join operator to the seed polynomial.
Both produce the coefficients K_mu(u) of the extended partition function;
the third, fermionic route lives in fermion.py.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import NamedTuple

from .errors import CapTooSmall
from .knot import KnotParams
from .laurent import LaurentPoly
from .partitions import (PowerSumPoly, adams_coefficients, check_partition,
                         kappa, mn_character, partitions_of,
                         schur_in_power_sums, weight)
from .ratio import QQ
from .series import TSeries, exp_linear, require_cap, zeta_series


class OVCoefficient(NamedTuple):
    """One coefficient K_mu(u) of the extended partition function."""

    mu: tuple
    value: TSeries


@lru_cache(maxsize=None)
def topological_locus(K, i, cap):
    """p*_i = (A^i - A^{-i}) / zeta(i u / b); a series with floor -1."""
    if i < 1:
        raise ValueError("index must be >= 1")
    inv = zeta_series(QQ(i) / K.b, cap + 2).inverse()
    return inv.scale(K.A_diff(i))


def homfly_extended(K, R, cap):
    """Extended colored HOMFLY-PT polynomial H_R as a power-sum polynomial.

    H_R = A^{P|R|} sum_{R1 |- Q|R|} c^{R1}_R exp(kappa_{R1} u) s_{R1}(p),
    with the framing exponential carried as a truncated series in u.
    """
    R = check_partition(R)
    amono = K.A_pow(K.P * weight(R))
    out = PowerSumPoly()
    for R1, c in adams_coefficients(R, K.Q).items():
        frame = exp_linear(kappa(R1), cap).scale(amono * c)
        out = out + schur_in_power_sums(R1).scale(frame)
    return out


@lru_cache(maxsize=None)
def _schur_at_locus(K, lam, cap):
    one = TSeries.const("u", 1)
    return schur_in_power_sums(lam).evaluate(
        lambda i: topological_locus(K, i, cap), one)


@lru_cache(maxsize=None)
def _homfly_at_locus(K, R, cap):
    """homfly_extended restricted to the topological locus."""
    amono = K.A_pow(K.P * weight(R))
    acc = TSeries.zero("u", cap)
    for R1, c in adams_coefficients(R, K.Q).items():
        term = exp_linear(kappa(R1), cap) * _schur_at_locus(K, R1, cap)
        acc = acc + term.scale(amono * c)
    return acc


def _ov_value_extended(K, mu, cap):
    """K_mu through the character sum over lambda |- |mu| (any indices)."""
    total = weight(mu)
    acc = TSeries.zero("u", cap)
    for lam in partitions_of(total):
        chi = mn_character(lam, mu)
        if chi:
            term = exp_linear(kappa(lam), cap) * _schur_at_locus(K, lam, cap)
            acc = acc + term.scale(chi)
    return acc.scale(K.A_pow(K.b * total) * QQ(1, prod(mu)))


def ov_coefficient_rossojones(K, mu, cap):
    """K_mu(u) via the Rosso-Jones expansion of the partition function.

    Colors with all parts divisible by Q go through H_R and the Adams
    coefficients; other index vectors only exist in the extended partition
    function and are computed by the lambda |- |mu| character sum.
    """
    mu = check_partition(sorted(mu, reverse=True))
    n = len(mu)
    if cap < 1:
        raise CapTooSmall("u-cap must be >= 1")
    if n == 0:
        return OVCoefficient((), TSeries.const("u", 1, cap))
    # a power-sum monomial of ell parts has a u-pole of order ell at the
    # topological locus, and ell can reach |mu|
    capI = cap + weight(mu) + 2
    if all(p % K.Q == 0 for p in mu):
        nu = tuple(p // K.Q for p in mu)
        acc = TSeries.zero("u", capI)
        for R in partitions_of(sum(nu)):
            chi = mn_character(R, nu)
            if chi:
                acc = acc + _homfly_at_locus(K, R, capI).scale(
                    QQ(chi, prod(mu)))
        value = acc
    else:
        value = _ov_value_extended(K, mu, capI)
    return OVCoefficient(mu, require_cap(value, cap).truncate(cap))


def cutjoin_apply(f):
    """The second cut-and-join operator on a power-sum polynomial.

    W2 = (1/2) sum_{a,b>=1} ((a+b) p_a p_b d/dp_{a+b}
                             + a b p_{a+b} d/dp_a d/dp_b);
    weight-preserving, Schur functions are eigenfunctions with the content
    sum as eigenvalue.
    """
    out = PowerSumPoly()
    for sigma, co in f.terms.items():
        mult = {}
        for part in sigma:
            mult[part] = mult.get(part, 0) + 1
        # splitting part: (a+b) p_a p_b d/dp_{a+b}
        for s, m in mult.items():
            if s < 2:
                continue
            base = list(sigma)
            base.remove(s)
            for a in range(1, s):
                newsig = tuple(sorted(base + [a, s - a], reverse=True))
                out = out + PowerSumPoly.monomial(newsig, co * QQ(s * m, 2))
        # joining part: a b p_{a+b} d/dp_a d/dp_b
        parts = sorted(mult)
        for a in parts:
            for b in parts:
                m = mult[a] * mult[b] if a != b else mult[a] * (mult[a] - 1)
                if not m:
                    continue
                base = list(sigma)
                base.remove(a)
                base.remove(b)
                newsig = tuple(sorted(base + [a + b], reverse=True))
                out = out + PowerSumPoly.monomial(newsig,
                                                  co * QQ(a * b * m, 2))
    return out


def ov_coefficient_cutjoin(K, mu, cap):
    """K_mu(u) via the truncated exponential of the cut-and-join operator.

    exp(u W2) acts on the seed prod_i p_{mu_i}; the result is restricted to
    the topological locus, where each power-sum monomial of ell parts
    contributes a pole of order ell in u, so the operator exponential is
    truncated at order cap + |mu| - 1.
    """
    mu = check_partition(sorted(mu, reverse=True))
    n = len(mu)
    if cap < 1:
        raise CapTooSmall("u-cap must be >= 1")
    if n == 0:
        return OVCoefficient((), TSeries.const("u", 1, cap))
    total = weight(mu)
    capI = cap + total + 2
    f = PowerSumPoly.monomial(mu, 1)
    one = TSeries.const("u", 1)
    acc = TSeries.zero("u", capI)
    for j in range(capI + total):
        val = f.evaluate(lambda i: topological_locus(K, i, capI), one)
        acc = acc + val.shift(j).scale(QQ(1, factorial(j)))
        if j < capI + total - 1:
            f = cutjoin_apply(f)
    value = acc.scale(K.A_pow(K.b * total) * QQ(1, prod(mu)))
    return OVCoefficient(mu, require_cap(value, cap).truncate(cap))
