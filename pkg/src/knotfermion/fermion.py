"""The free-fermion route to the extended partition function coefficients.

Vacuum expectations of products of energy operators E_n(z) are evaluated by
commuting the leftmost positive-energy operator to the right with
[E_a(z), E_b(w)] = zeta(aw - bz) E_{a+b}(z+w), splitting every E_0 into its
normally ordered part plus the scalar 1/zeta.  On top of that sit the
A~(m, um) operators, whose E-coefficients come from an exponential
generating function, the correlators K_mu, their connected versions, and
the genus slices C^{(g)}.

An engine instance fixes the knot, the u-cap and optionally a rational
specialization of ahat = A^{1/Q}; it owns all memo caches, so independent
engines can run in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple

from .errors import CapTooSmall, StabilityRange
from .knot import AH, KnotParams
from .laurent import LaurentPoly
from .partitions import check_partition, compositions, set_partitions, weight
from .ratio import QQ, is_scalar
from .series import TSeries, require_cap, zeta_series


@dataclass(frozen=True)
class EOp:
    """The operator E_n(c u); tilde=False adds the delta_{n,0}/zeta scalar."""

    energy: int
    arg: object
    tilde: bool = True

    def __post_init__(self):
        c = QQ(self.arg)
        object.__setattr__(self, "arg", c)
        if self.energy == 0 and not self.tilde and not c:
            raise ValueError("E_0(0) is not defined (1/zeta(0) pole)")


class AtildeCoeffs(NamedTuple):
    """Scalar series multiplying E_{k-m}(um) inside A~(m, um)."""

    m: int
    cap: int
    coeffs: tuple


class ConnectedCorrelator(NamedTuple):
    """Connected correlator K°_mu with access to its genus slices."""

    mu: tuple
    K: KnotParams
    value: TSeries

    def genus_slice(self, g):
        return _genus_slice(self.K, self.mu, self.value, g)


def _genus_slice(K, mu, value, g):
    n = len(mu)
    order = 2 * g - 2 + n
    if g < 0 or order < -n:
        raise StabilityRange(f"no u^{order} coefficient for n={n}")
    co = value.coeff(order)
    factor = QQ(K.Q) ** n * K.b ** order
    if is_scalar(co):
        return QQ(co) * factor
    return co * factor


class FermionEngine:
    """Evaluation context: knot, working u-cap, optional ahat value."""

    def __init__(self, K, cap, ah=None):
        self.K = K
        self.cap = cap
        self.ah = None if ah is None else QQ(ah)
        self._zeta = {}
        self._zeta_inv = {}
        self._acoeffs = {}
        self._vev = {}
        self._kmu = {}

    # ---- scalar atoms ----

    def A_pow(self, c):
        e = QQ(c) * self.K.Q
        if e.denominator != 1:
            raise ValueError(f"A^{c} not integral in ahat")
        e = int(e)
        if self.ah is not None:
            return self.ah ** e
        return LaurentPoly.monomial(AH, (e,))

    def A_diff(self, i):
        return self.A_pow(i) - self.A_pow(-i)

    def zeta(self, c):
        c = QQ(c)
        s = self._zeta.get(c)
        if s is None:
            s = self._zeta[c] = zeta_series(c, self.cap + 2)
        return s

    def zeta_inv(self, c):
        c = QQ(c)
        s = self._zeta_inv.get(c)
        if s is None:
            s = self._zeta_inv[c] = self.zeta(c).inverse()
        return s

    # ---- A~ coefficients ----

    def atilde_coeffs(self, m, kmax):
        """Series coefficients of E_{k-m}(um) in A~(m, um), k = 0..kmax.

        The partition sum over lambda |- k collapses to the exponential
        generating function exp(sum_i tau_i w^i) with
        tau_i = p*_i zeta(ium)/i, read off by the standard derivative
        recurrence for exp of a power series.
        """
        cached = self._acoeffs.get(m)
        if cached is None:
            one = TSeries.const("u", 1)
            cached = self._acoeffs[m] = {"tau": [None], "E": [one]}
        tau, E = cached["tau"], cached["E"]
        while len(tau) <= kmax:
            i = len(tau)
            t = (self.zeta(QQ(i * m)) * self.zeta_inv(QQ(i) / self.K.b))
            tau.append(t.scale(self.A_diff(i) * QQ(1, i)))
        while len(E) <= kmax:
            k = len(E)
            acc = None
            for j in range(1, k + 1):
                term = (tau[j] * E[k - j]).scale(j)
                acc = term if acc is None else acc + term
            E.append(acc.scale(QQ(1, k)))
        lead = self.A_pow(self.K.b * m) * QQ(1, m)
        return [E[k].scale(lead) for k in range(kmax + 1)]

    # ---- vacuum expectations ----

    def vev_tilde(self, ops):
        """<0| prod E~_{n_i}(c_i u) |0> for a tuple of (energy, arg) pairs."""
        cached = self._vev.get(ops)
        if cached is not None:
            return cached
        out = self._vev_compute(ops)
        self._vev[ops] = out
        return out

    def _vev_compute(self, ops):
        if not ops:
            return TSeries.const("u", 1)
        if sum(n for n, _ in ops) != 0 or ops[0][0] <= 0:
            return TSeries.zero("u")
        n1, c1 = ops[0]
        rest = ops[1:]
        acc = TSeries.zero("u")
        for j, (n2, c2) in enumerate(rest):
            zc = n1 * c2 - n2 * c1
            if not zc:
                continue
            pref = self.zeta(zc)
            head, tail = rest[:j], rest[j + 1:]
            nn, nc = n1 + n2, c1 + c2
            if nn == 0:
                if not nc:
                    raise ValueError("E_0(0) produced in commutation")
                sub = self.vev_tilde(head + tail)
                if sub:
                    acc = acc + pref * self.zeta_inv(nc) * sub
                sub = self.vev_tilde(head + ((0, nc),) + tail)
                if sub:
                    acc = acc + pref * sub
            else:
                sub = self.vev_tilde(head + ((nn, nc),) + tail)
                if sub:
                    acc = acc + pref * sub
        return acc

    def vev(self, ops):
        """Vacuum expectation of a product of EOp (tilde or not)."""
        # expand every non-tilde zero-energy operator into E~_0 + 1/zeta
        branches = [(TSeries.const("u", 1), ())]
        for op in ops:
            n, c = op.energy, QQ(op.arg)
            if n == 0 and not op.tilde:
                new = []
                for scal, ts in branches:
                    new.append((scal * self.zeta_inv(c), ts))
                    new.append((scal, ts + ((0, c),)))
                branches = new
            else:
                branches = [(scal, ts + ((n, c),)) for scal, ts in branches]
        acc = TSeries.zero("u")
        for scal, ts in branches:
            v = self.vev_tilde(ts)
            if v:
                acc = acc + scal * v
        return acc

    # ---- correlators ----

    def K_mu(self, mu):
        mu = tuple(sorted(mu, reverse=True))
        cached = self._kmu.get(mu)
        if cached is not None:
            return cached
        n = len(mu)
        if n == 0:
            return TSeries.const("u", 1, self.cap)
        total = sum(mu)
        coeffs = [self.atilde_coeffs(m, total) for m in mu]
        acc = TSeries.zero("u")
        for ks in compositions(total, n):
            if ks[0] < mu[0]:
                continue  # leftmost energy < 0 kills the covacuum
            ops = tuple(EOp(k - m, m, tilde=False)
                        for k, m in zip(ks, mu))
            corr = self.vev(ops)
            if not corr:
                continue
            term = corr
            for i, k in enumerate(ks):
                term = term * coeffs[i][k]
            acc = acc + term
        self._kmu[mu] = acc
        return acc

    def connected_K(self, mu):
        mu = tuple(sorted(mu, reverse=True))
        n = len(mu)
        acc = TSeries.zero("u")
        for pi in set_partitions(list(range(n))):
            sign = QQ((-1) ** (len(pi) - 1) * prod(range(1, len(pi))))
            term = TSeries.const("u", sign)
            for block in pi:
                term = term * self.K_mu(tuple(mu[i] for i in block))
            acc = acc + term
        return acc


_ENGINES = {}


def engine(K, cap, ah=None):
    key = (K, cap, ah)
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _ENGINES[key] = FermionEngine(K, cap, ah)
    return eng


def e_correlator(ops, cap):
    """<0| prod ops |0> as a truncated series in u."""
    ops = tuple(ops)
    dummy = KnotParams(1, 1)
    value = engine(dummy, cap + len(ops) + 2).vev(ops)
    return require_cap(value, cap).truncate(cap)


def a_tilde_coeffs(m, K, cap, kmax=None):
    if m < 1:
        raise ValueError("m must be >= 1")
    if kmax is None:
        kmax = m
    coeffs = engine(K, cap + 2).atilde_coeffs(m, kmax)
    return AtildeCoeffs(m, cap, tuple(c.truncate(cap) for c in coeffs))


def K_mu(mu, K, cap, ah=None):
    """K_mu(u) = <prod_i A~(mu_i, u mu_i)>, truncated to the given cap."""
    mu = check_partition(sorted(mu, reverse=True))
    if cap < 1:
        raise CapTooSmall("u-cap must be >= 1")
    value = engine(K, cap + len(mu) + 2, ah).K_mu(mu)
    return require_cap(value, cap).truncate(cap)


def connected_K(mu, K, cap, ah=None):
    """Connected correlator via inclusion-exclusion over set partitions."""
    mu = check_partition(sorted(mu, reverse=True))
    if cap < 1:
        raise CapTooSmall("u-cap must be >= 1")
    value = engine(K, cap + len(mu) + 2, ah).connected_K(mu)
    return ConnectedCorrelator(mu, K, require_cap(value, cap).truncate(cap))


def C_g(g, mu, K, ah=None):
    """C^{(g)}_mu = Q^n b^{2g-2+n} [u^{2g-2+n}] K°_mu."""
    mu = check_partition(sorted(mu, reverse=True))
    n = len(mu)
    order = 2 * g - 2 + n
    if g < 0 or order < -n:
        raise StabilityRange(f"(g, n) = ({g}, {n}) below the series floor")
    cap = max(order + 1, 1)
    return connected_K(mu, K, cap, ah).genus_slice(g)
