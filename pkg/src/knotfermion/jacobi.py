"""Jacobi polynomials and the identities behind quasi-polynomiality.

Everything is Gamma-free: the hypergeometric sums are finite, and every
Gamma-function ratio is rewritten as a rising-factorial product, so values
stay in QQ[a] (optionally with a symbolic rho*b or rho adjoined).  The
polynomial variable is a = A^2 throughout; z = 1 - 2a is the classical
Jacobi argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import FitFailed
from .knot import KnotParams
from .laurent import LaurentPoly
from .linalg import lagrange_coeffs, rref_solve
from .partitions import multiplicities, partitions_of
from .ratio import QQ, ZERO, is_scalar
from .series import TSeries, exp_linear, zeta_series

A_ = ("a",)
ARB = ("a", "rb")


def _rising(x, k):
    """Rising factorial x (x+1) ... (x+k-1) in a generic ring."""
    out = 1
    for j in range(k):
        out = out * (x + j)
    return out


def jacobi_P(n, alpha, beta, at_one_minus_2a=True):
    """Jacobi polynomial P_n^{(alpha,beta)} evaluated at z = 1 - 2a.

    Computed as the terminating hypergeometric sum
        sum_s (-1)^s / (s! (n-s)!) (n+alpha+beta+1)_s (alpha+s+1)_{n-s} a^s,
    which is polynomial in alpha, so alpha may be a rational or a symbolic
    LaurentPoly.  n < 0 gives 0 by convention.  With at_one_minus_2a=False
    the result is expressed in the variable z instead.
    """
    symbolic = not is_scalar(alpha)
    variables = ("a",) + alpha.vars if symbolic else A_
    out = LaurentPoly.zero(variables)
    if n < 0:
        return out
    for s in range(n + 1):
        co = _rising(n + alpha + beta + 1, s) * _rising(alpha + s + 1, n - s)
        co = co * QQ((-1) ** s, factorial(s) * factorial(n - s))
        if is_scalar(co):
            term = LaurentPoly.const(variables, co)
        else:
            term = co.lift(variables)
        out = out + term * LaurentPoly.gen(variables, "a", s)
    if not at_one_minus_2a:
        zvars = tuple("z" if v == "a" else v for v in variables)
        half = LaurentPoly(zvars, {(0,) * len(zvars): QQ(1, 2)})
        z = LaurentPoly.gen(zvars, "z")
        return out.subs("a", half - z * QQ(1, 2))
    return out


def symbolic_rb():
    """The symbolic rho*b generator used by the identity checks."""
    return LaurentPoly.gen(("rb",), "rb")


def J(m, rho_b):
    """J_m = P_m^{(rho b - m - 1, 1)}(1 - 2a); rho_b rational or symbolic."""
    return jacobi_P(m, rho_b - m - 1, 1)


def three_term_residual(k, rho_b):
    """J_k + (a + 1 + (a-1) rho b / k) J_{k-1} + a J_{k-2}; must vanish."""
    if k < 1:
        raise ValueError("k must be >= 1")
    jk = J(k, rho_b)
    jk1 = J(k - 1, rho_b)
    jk2 = J(k - 2, rho_b)
    variables = jk.vars
    a = LaurentPoly.gen(variables, "a")
    if is_scalar(rho_b):
        mid = a + 1 + (a - 1) * LaurentPoly.const(variables, QQ(rho_b) / k)
    else:
        mid = a + 1 + (a - 1) * rho_b.lift(variables) * QQ(1, k)
    return jk + mid * jk1.lift(variables) + a * jk2.lift(variables)


def genfun_coefficient(m, x):
    """Difference of the partition sum and its Jacobi closed form.

    LHS: sum over partitions of m of prod_i ((A^i - A^{-i}) x / i)^{m_i}/m_i!
    RHS: (-1)^m A^{-m} (1 - A^2) (x/m) P_{m-1}^{(x-m, 1)}(1 - 2A^2).
    Works in the Laurent ring of the bare HOMFLY variable A; x may be
    rational or symbolic.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    symbolic = not is_scalar(x)
    variables = ("A",) + x.vars if symbolic else ("A",)
    A = LaurentPoly.gen(variables, "A")
    xl = x.lift(variables) if symbolic else LaurentPoly.const(variables, x)
    lhs = LaurentPoly.zero(variables)
    for lam in partitions_of(m):
        term = LaurentPoly.one(variables)
        for i, mult in multiplicities(lam).items():
            base = (A ** i - A ** -i) * xl * QQ(1, i)
            term = term * base ** mult / factorial(mult)
        lhs = lhs + term
    jac = jacobi_P(m - 1, x - m, 1)  # polynomial in (a, x-vars)
    jac = jac.subs_power("a", "A", 2)
    if symbolic:
        jac = jac.lift(tuple(dict.fromkeys(("A",) + variables)))
        jac = jac.lift(variables) if jac.vars != variables else jac
    rhs = (A ** -m * (1 - A ** 2) * xl * jac.lift(variables)
           * QQ((-1) ** m, m))
    return lhs - rhs


# ---------- q-hypergeometric identity ----------


def _qpow(x, b, cap):
    """q^x as a u-series, q = exp(-u/b)."""
    return exp_linear(-QQ(x) / b, cap)


def _qpoch(y_exp, b, n, cap):
    """(q^{y_exp}; q)_n as a u-series."""
    out = TSeries.const("u", 1, cap)
    for k in range(1, n + 1):
        out = out * (1 - _qpow(QQ(y_exp) + (k - 1), b, cap))
    return out


def qphi_2phi1(a1_exp, a2_exp, b1_exp, b, arg, cap, nmax):
    """The terminating basic hypergeometric sum 2phi1 with q = e^{-u/b}.

    Parameters are given as q-exponents; arg is a coefficient-ring element
    multiplied by q per term.  Valid when no denominator Pochhammer factor
    degenerates to zero.
    """
    acc = None
    for nn in range(nmax + 1):
        num = _qpoch(a1_exp, b, nn, cap) * _qpoch(a2_exp, b, nn, cap)
        den = _qpoch(b1_exp, b, nn, cap) * _qpoch(1, b, nn, cap)
        coeff = num * den.inverse() if nn else TSeries.const("u", 1, cap)
        term = coeff * _qpow(nn, b, cap)
        term = term.scale(arg ** nn) if not is_scalar(arg) \
            else term.scale(QQ(arg) ** nn)
        acc = term if acc is None else acc + term
    return acc


def _xi_w_series(K, rho, wcap, ucap):
    """exp(sum_i (a^i-1)/i w^i zeta(i u rho)/zeta(i u / b)) as a w-series.

    Coefficients are u-series over QQ[a]; rho is rational here.
    """
    b = K.b
    a = LaurentPoly.gen(A_, "a")
    E = [TSeries.const("u", LaurentPoly.one(A_), ucap)]
    tau = [None]
    for i in range(1, wcap):
        ratio = (zeta_series(QQ(rho) * i, ucap + 2)
                 * zeta_series(QQ(i) / b, ucap + 2).inverse())
        tau.append(ratio.truncate(ucap).map_coeffs(
            lambda co, i=i: (a ** i - 1) * QQ(co, i)))
    for k in range(1, wcap):
        acc = None
        for j in range(1, k + 1):
            term = (tau[j] * E[k - j]).scale(j)
            acc = term if acc is None else acc + term
        E.append(acc.scale(QQ(1, k)))
    return E


def qphi_identity_residual(m, K, rho, cap):
    """LHS - RHS of the q-hypergeometric form of the w-coefficient.

    LHS: [w^m] exp(sum (a^i-1)/i w^i zeta(iu rho)/zeta(iu/b)).
    RHS: q^{m(1+s)/2} sum_{r=0}^m (q^s;q)_r (q^{-s};q)_{m-r} q^{-rs} a^r
         / ((q;q)_r (q;q)_{m-r})  with s = rho b, q = e^{-u/b};
    this is the 2phi1 representation with the m-Pochhammer prefactor
    distributed into the sum, which stays well-defined when rho b is a
    positive integer.  Must vanish identically up to the u-cap.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    sigma = QQ(rho) * K.b
    b = K.b
    ucap = cap
    lhs = _xi_w_series(K, rho, m + 1, ucap)[m]
    a = LaurentPoly.gen(A_, "a")
    acc = None
    inner_cap = ucap + 2 * m + 2
    for r in range(m + 1):
        num = (_qpoch(sigma, b, r, inner_cap)
               * _qpoch(-sigma, b, m - r, inner_cap))
        den = (_qpoch(1, b, r, inner_cap) * _qpoch(1, b, m - r, inner_cap))
        if not num:
            continue
        ratio = num * den.inverse()
        ratio = ratio * _qpow(-QQ(r) * sigma, b, inner_cap)
        term = ratio.map_coeffs(lambda co, r=r: (a ** r) * co)
        acc = term if acc is None else acc + term
    rhs = acc * _qpow(QQ(m) * (1 + sigma) / 2, b, inner_cap)
    return (lhs - rhs.truncate(ucap)).truncate(ucap)


# ---------- G-polynomial decomposition ----------

AR = ("a", "rho")
ARM = ("a", "rho", "m")


def _xi_w_series_symbolic(K, wcap, ucap):
    """The w-series with rho symbolic; coefficients in QQ[a, rho]."""
    b = K.b
    a = LaurentPoly.gen(AR, "a")
    rho = LaurentPoly.gen(AR, "rho")
    E = [TSeries.const("u", LaurentPoly.one(AR), ucap)]
    tau = [None]
    for i in range(1, wcap):
        zs = TSeries("u", {
            2 * j + 1: rho ** (2 * j + 1)
            * QQ(i ** (2 * j + 1), 4 ** j * factorial(2 * j + 1))
            for j in range(ucap // 2 + 1)}, ucap + 2)
        inv = zeta_series(QQ(i) / b, ucap + 2).inverse()
        factor = (a ** i - 1) * QQ(1, i)
        tau.append((zs * inv).truncate(ucap).map_coeffs(
            lambda co, f=factor: f * co))
    for k in range(1, wcap):
        acc = None
        for j in range(1, k + 1):
            term = (tau[j] * E[k - j]).scale(j)
            acc = term if acc is None else acc + term
        E.append(acc.scale(QQ(1, k)))
    return E


@dataclass
class GFitResult:
    """Certified decomposition of [u^{2k} w^m] coefficients.

    G1 and G2 are polynomials in (rho, m) with coefficients in
    QQ[a, (1-a)^{-1}], stored as cleared polynomials over (1-a)^den_exp:
    (1-a)^den_exp target_m(rho, a) = G1(rho, m) J_{m-1} + G2(rho, m) J_{m-2}
    holds as a polynomial identity for every sample and holdout m.
    """

    k: int
    degree: int
    den_exp: int
    G1: LaurentPoly
    G2: LaurentPoly
    samples: tuple
    holdout: tuple
    unique: bool
    g0_value_ok: bool
    double_zero_ok: bool
    odd_u_vanish_ok: bool


def _poly_div_rho(p):
    """Exact division of a QQ[a,rho] polynomial by rho."""
    if p.valuation("rho") < 1 and p:
        raise FitFailed("w-coefficient not divisible by rho")
    return p / LaurentPoly.gen(AR, "rho")


def _spec_a(p, a0):
    """Specialize the variable a of a QQ[a,rho] polynomial; rho survives."""
    return p.subs("a", a0)


def _gfit_solve_at(spec, D, samples):
    """Solve the G-coefficient system with a specialized (table lookup)."""
    monos = [(s, t) for s in range(D + 1) for t in range(D + 1 - s)]
    rows, rhs = [], []
    for m in samples:
        tgt, J1, J2 = spec[m]
        rmax = max(tgt.degree("rho") if tgt else 0,
                   D + max(J1.degree("rho") if J1 else 0,
                           J2.degree("rho") if J2 else 0))
        mpow = [QQ(m) ** t for t in range(D + 1)]
        for r in range(rmax + 1):
            row = []
            for s, t in monos:
                row.append(J1.coeff_of(r - s) * mpow[t])
            for s, t in monos:
                row.append(J2.coeff_of(r - s) * mpow[t])
            rows.append(row)
            rhs.append(tgt.coeff_of(r))
    status, sol, _ = rref_solve(rows, rhs)
    return status, sol, monos


def g_decomposition(k, m_samples, K, holdout=None, max_degree=None):
    """Fit and certify the two-Jacobi decomposition of [u^{2k} w^m].

    Solves for polynomials G1_k, G2_k in (rho, m) of minimal total degree
    (bounded by 9k+2) by exact linear algebra at rational specializations
    of a, interpolates the a-dependence, and then certifies the identity
    symbolically in (a, rho) at every sample and holdout m.  Also checks
    the m=0 boundary values, the double zero of G(m, m) at m=0 for k >= 1,
    and that odd u-powers of the w-series vanish.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    samples = tuple(sorted(m_samples))
    if holdout is None:
        top = samples[-1]
        holdout = tuple(top + 1 + i for i in range(3))
    holdout = tuple(sorted(holdout))
    bound = 9 * k + 2 if max_degree is None else max_degree
    all_m = sorted(set(samples) | set(holdout))
    ucap = 2 * k + 2
    E = _xi_w_series_symbolic(K, all_m[-1] + 1, ucap)

    odd_ok = all(not E[m].coeff(j) for m in all_m
                 for j in range(1, ucap, 2))

    targets, j1, j2 = {}, {}, {}
    rho = LaurentPoly.gen(("rho",), "rho")
    for m in all_m:
        targets[m] = _poly_div_rho(E[m].coeff(2 * k) * QQ((-1) ** m * m))
        j1[m] = jacobi_P(m - 1, rho * K.b - m, 1)
        j2[m] = jacobi_P(m - 2, rho * K.b - m + 1, 1)
        if j1[m].vars != AR:
            j1[m] = j1[m].lift(AR)
        if j2[m].vars != AR:
            j2[m] = j2[m].lift(AR)

    amax = max(t.degree("a") if t else 0 for t in targets.values())
    jmax = max(all_m)
    emax = 2 * k + 2  # pole order bound at a = 1
    npoints = amax + jmax + emax + 6
    apoints = [QQ(n) for n in range(2, 2 + npoints)]
    # a-specializations are degree-independent; build them once, lazily
    spec_cache = {}

    def spec_at(a0):
        tab = spec_cache.get(a0)
        if tab is None:
            tab = spec_cache[a0] = {
                m: (_spec_a(targets[m], a0), _spec_a(j1[m], a0),
                    _spec_a(j2[m], a0))
                for m in all_m}
        return tab

    last_status = None
    for D in range(bound + 1):
        # cheap consistency probe at one specialization before the full run
        status, _, _ = _gfit_solve_at(spec_at(apoints[0]), D, samples)
        if status == "inconsistent":
            last_status = status
            continue
        sols = []
        ok = True
        unique = True
        for a0 in apoints:
            status, sol, monos = _gfit_solve_at(spec_at(a0), D, samples)
            if status == "inconsistent":
                ok = False
                last_status = status
                break
            unique = unique and status == "unique"
            sols.append(sol)
        if not ok:
            continue
        T = len(monos)
        # the coefficient functions of a may have poles at a = 1 only;
        # clear (1-a)^e and interpolate, smallest e that stabilizes wins
        for e in range(emax + 1):
            scales = [(1 - a0) ** e for a0 in apoints]
            tables = []
            stable = True
            for idx in range(2 * T):
                vals = [sol[idx] * s for sol, s in zip(sols, scales)]
                coeffs = lagrange_coeffs(apoints, vals)
                if len(coeffs) - 1 > npoints - 3:
                    stable = False
                    break
                tables.append(coeffs)
            if not stable:
                continue
            g1c, g2c = {}, {}
            for idx, coeffs in enumerate(tables):
                s, t = monos[idx % T]
                tgt = g1c if idx < T else g2c
                for ae, co in enumerate(coeffs):
                    if co:
                        tgt[(ae, s, t)] = co
            g1 = LaurentPoly(ARM, g1c)
            g2 = LaurentPoly(ARM, g2c)
            if all(_gfit_certify(targets[m], j1[m], j2[m], g1, g2, e, m)
                   for m in all_m):
                g0_value_ok = _check_g0(g1, g2, e, k, K)
                double_zero_ok = _check_double_zero(g1, g2, k)
                return GFitResult(k, D, e, g1, g2, samples, holdout, unique,
                                  g0_value_ok, double_zero_ok, odd_ok)
            last_status = "certification failed"
            break
    raise FitFailed(
        f"no degree <= {bound} decomposition found (last: {last_status})")


def _gfit_certify(target, J1, J2, g1, g2, e, m):
    """(1-a)^e target == G1(., m) J1 + G2(., m) J2, exactly in (a, rho)."""
    G1m = g1.subs("m", QQ(m))
    G2m = g2.subs("m", QQ(m))
    if G1m.vars != AR:
        G1m = G1m.lift(AR)
    if G2m.vars != AR:
        G2m = G2m.lift(AR)
    one_minus_a = 1 - LaurentPoly.gen(AR, "a")
    return target * one_minus_a ** e == G1m * J1 + G2m * J2


def _check_g0(g1, g2, e, k, K):
    """G1_k(rho, 0) = delta_{k,0} (1-a) b and G2_k(rho, 0) = 0.

    With the (1-a)^e clearing this reads
    G1~(rho, 0) = delta_{k,0} (1-a)^{e+1} b  and  G2~(rho, 0) = 0.
    """
    G10 = g1.subs("m", 0)
    G20 = g2.subs("m", 0)
    a = LaurentPoly.gen(AR, "a")
    expect = ((1 - a) ** (e + 1) * K.b if k == 0 else LaurentPoly.zero(AR))
    G10 = G10.lift(AR) if G10.vars != AR else G10
    return G10 == expect and not G20

def _check_double_zero(g1, g2, k):
    """For k >= 1, G1(m, m) and G2(m, m) have a double zero at m = 0."""
    if k == 0:
        return True
    ok = True
    for g in (g1, g2):
        diag = g.subs("rho", LaurentPoly.gen(("m",), "m"))
        ok = ok and diag.valuation("m") >= 2 if diag else ok
    return ok


def hyper2f1_jacobi_residuals(m, rho_b):
    """Residuals of the two Gamma-ratio/2F1 identities against J-polynomials.

    Both sides are polynomials in a (and rho_b, if symbolic): the Gamma
    ratio Gamma(m - rb)/(Gamma(m+1) Gamma(-rb)) is rewritten as the product
    prod_{j=0}^{m-1} (j - rb) / m!, which combines with the denominator
    Pochhammers of 2F1(-m, rb; rb+1-m)(a) into a polynomial.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    symbolic = not is_scalar(rho_b)
    variables = ("a",) + rho_b.vars if symbolic else A_
    rb = rho_b.lift(variables) if symbolic \
        else LaurentPoly.const(variables, rho_b)
    a = LaurentPoly.gen(variables, "a")

    # G_s = prod_{j=0}^{m-1}(j - rb) / (rb + 1 - m)_s, built from s = m down
    G = [None] * (m + 1)
    G[m] = LaurentPoly.const(variables, QQ((-1) ** m))
    for s in range(m - 1, -1, -1):
        G[s] = G[s + 1] * (rb - (m - s - 1))
    lhs1 = LaurentPoly.zero(variables)
    for s in range(m + 1):
        co = _rising(rb, s) * G[s] * QQ((-1) ** s,
                                        factorial(s) * factorial(m - s))
        lhs1 = lhs1 + co * a ** s
    lhs2 = lhs1.deriv("a")

    jm1 = J(m - 1, rb if symbolic else QQ(rho_b))
    jm2 = J(m - 2, rb if symbolic else QQ(rho_b))
    jm1 = jm1.lift(variables) if jm1.vars != variables else jm1
    jm2 = jm2.lift(variables) if jm2.vars != variables else jm2
    rhs1 = (1 - a) * rb * jm1 * QQ((-1) ** m, m)
    rhs2 = rb * (jm1 + jm2) * QQ((-1) ** (m + 1))
    return lhs1 - rhs1, lhs2 - rhs2
