"""Integer partitions, symmetric-group characters, Schur/power-sum data.

A partition is a weakly decreasing tuple of positive ints; the empty tuple
is the empty partition.  Characters are computed with the Murnaghan-Nakayama
rule on beta-sets and memoized; every value is an exact integer/rational.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .errors import WeightMismatch
from .ratio import QQ, ZERO, is_scalar


def check_partition(parts):
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition parts must be weakly decreasing")
    return parts


def weight(p):
    return sum(p)


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n as decreasing tuples, lexicographically sorted."""
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(sorted(gen(n, n)))


def partitions_up_to(n):
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return out


def multiplicities(p):
    m = {}
    for part in p:
        m[part] = m.get(part, 0) + 1
    return m


def z_aut(sigma):
    """The centralizer order z_sigma = prod_i i^{m_i} m_i!."""
    z = 1
    for part, m in multiplicities(sigma).items():
        z *= part ** m * factorial(m)
    return z


def transpose(p):
    if not p:
        return ()
    cols = [0] * p[0]
    for part in p:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def kappa(p):
    """Content sum over cells: sum_{(i,j) in p} (j - i)."""
    return sum(part * (part + 1) // 2 - part * (i + 1)
               for i, part in enumerate(p))


def scale_partition(p, q):
    """Multiply every part by q."""
    return tuple(part * q for part in p)


@lru_cache(maxsize=None)
def mn_character(lam, sigma):
    """Irreducible symmetric-group character chi^lam_sigma (an integer)."""
    lam, sigma = tuple(lam), tuple(sigma)
    if weight(lam) != weight(sigma):
        raise WeightMismatch(f"|{lam}| != |{sigma}|")
    return _mn(lam, sigma)


@lru_cache(maxsize=None)
def _mn(lam, sigma):
    if not sigma:
        return 1
    r, rest = sigma[0], sigma[1:]
    # beta-set of lam: strictly decreasing first-column hook lengths
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    beta_set = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        newbeta = sorted(beta_set - {b} | {nb}, reverse=True)
        # strip height = number of beta entries jumped over
        height = sum(1 for x in beta if nb < x < b)
        # convert beta-set back to a partition
        m = len(newbeta)
        newlam = tuple(x - (m - 1 - i) for i, x in enumerate(newbeta))
        newlam = tuple(p for p in newlam if p > 0)
        total += (-1) ** height * _mn(newlam, rest)
    return total


class PowerSumPoly:
    """Finite linear combination of power-sum monomials p_sigma.

    Keys are partitions; coefficients live in any exact ring used by the
    package (rationals, Laurent polynomials, truncated series).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for sigma, co in terms.items():
                if co:
                    self.terms[tuple(sigma)] = co

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, sigma, coeff=1):
        if is_scalar(coeff):
            coeff = QQ(coeff)
        return cls({tuple(sigma): coeff} if coeff else {})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        t = dict(self.terms)
        for sigma, co in other.terms.items():
            s = t.get(sigma, ZERO) + co
            if s:
                t[sigma] = s
            else:
                t.pop(sigma, None)
        out = PowerSumPoly()
        out.terms = t
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        if is_scalar(k):
            k = QQ(k)
        out = PowerSumPoly()
        if k:
            out.terms = {s: co * k for s, co in self.terms.items()}
        return out

    def weights(self):
        return {weight(s) for s in self.terms}

    def coeff(self, sigma):
        return self.terms.get(tuple(sigma), ZERO)

    def evaluate(self, value_of_part, one):
        """Substitute p_i -> value_of_part(i); returns sum coeff * prod."""
        cache = {}
        acc = None
        for sigma, co in sorted(self.terms.items()):
            prod = one
            for part in sigma:
                if part not in cache:
                    cache[part] = value_of_part(part)
                prod = prod * cache[part]
            term = prod * co
            acc = term if acc is None else acc + term
        return acc if acc is not None else one * 0

    def __eq__(self, other):
        return isinstance(other, PowerSumPoly) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({co})*p{list(s)}"
                          for s, co in sorted(self.terms.items()))


def schur_in_power_sums(R):
    """s_R = sum_{sigma |- |R|} chi^R_sigma p_sigma / z_sigma."""
    R = check_partition(R)
    n = weight(R)
    out = PowerSumPoly()
    for sigma in partitions_of(n):
        chi = mn_character(R, sigma)
        if chi:
            out = out + PowerSumPoly.monomial(sigma, QQ(chi, z_aut(sigma)))
    return out


def adams_coefficients(R, Q):
    """Expansion of the Q-th Adams operation of s_R in the Schur basis.

    Returns {R1 |- Q|R| : integer coefficient} with
    c^{R1}_R = sum_sigma chi^R_sigma chi^{R1}_{Q sigma} / z_sigma.
    """
    R = check_partition(R)
    if Q < 1:
        raise ValueError("Q must be >= 1")
    n = weight(R)
    out = {}
    for R1 in partitions_of(Q * n):
        val = ZERO
        for sigma in partitions_of(n):
            chi = mn_character(R, sigma)
            if chi:
                val += QQ(chi * mn_character(R1, scale_partition(sigma, Q)),
                          z_aut(sigma))
        if val:
            if val.denominator != 1:
                raise ArithmeticError(
                    f"Adams coefficient not integral: {R}, Q={Q}, {R1}")
            out[R1] = int(val)
    return out


def set_partitions(items):
    """All set partitions of a list, as tuples of tuples."""
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        # first joins an existing block or starts its own
        for i in range(len(sub)):
            yield sub[:i] + ((first,) + sub[i],) + sub[i + 1:]
        yield ((first,),) + sub


def compositions(total, n):
    """All tuples of n nonnegative ints summing to total."""
    if n == 0:
        if total == 0:
            yield ()
        return
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, n - 1):
            yield (first,) + rest
