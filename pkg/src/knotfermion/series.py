"""Truncated Laurent series with exact window bookkeeping.

TSeries is a Laurent series in one named formal variable, with coefficients
in an exact ring (QQ scalars or LaurentPoly).  Each value carries a cap: the
exclusive upper bound on exponents it is known at.  Arithmetic propagates
caps honestly: a product of series known on [f1, c1) and [f2, c2) is known
on [f1+f2, min(f1+c2, f2+c1)), mixed-cap addition truncates to the smaller
cap, and reading a coefficient at or beyond the cap raises.  cap=None means
the value is exact (a Laurent polynomial seen as a series).

MultiSeries is the straightforward multivariate analogue used for the
two-variable expansions; it only tracks per-variable caps.
"""

from __future__ import annotations

from math import factorial, inf

from .errors import (BadValuation, CapTooSmall, NonInvertibleLeadingTerm,
                     TruncationError)
from .laurent import LaurentPoly
from .ratio import QQ, ZERO, is_scalar, qq_binomial, rat_str


def _ring_inv(x):
    if is_scalar(x):
        if not x:
            raise NonInvertibleLeadingTerm("zero leading coefficient")
        return 1 / QQ(x)
    if isinstance(x, LaurentPoly):
        return x.monomial_inverse()
    raise NonInvertibleLeadingTerm(f"cannot invert {type(x).__name__}")


def _coeff_json(x):
    return rat_str(x) if is_scalar(x) else x.to_json()


class TSeries:
    __slots__ = ("var", "c", "cap")

    def __init__(self, var, coeffs=None, cap=None):
        self.var = var
        self.cap = cap
        c = {}
        if coeffs:
            for e, co in coeffs.items():
                if co and (cap is None or e < cap):
                    c[e] = co
        self.c = c

    @classmethod
    def _raw(cls, var, coeffs, cap):
        self = object.__new__(cls)
        self.var = var
        self.c = coeffs
        self.cap = cap
        return self

    @classmethod
    def zero(cls, var, cap=None):
        return cls._raw(var, {}, cap)

    @classmethod
    def const(cls, var, s, cap=None):
        if is_scalar(s):
            s = QQ(s)
        if not s or (cap is not None and cap <= 0):
            return cls._raw(var, {}, cap)
        return cls._raw(var, {0: s}, cap)

    @classmethod
    def monomial(cls, var, e, coeff=1, cap=None):
        if is_scalar(coeff):
            coeff = QQ(coeff)
        if not coeff or (cap is not None and e >= cap):
            return cls._raw(var, {}, cap)
        return cls._raw(var, {e: coeff}, cap)

    # ---------- inspection ----------

    def floor(self):
        """Lowest stored exponent (0 for the zero series)."""
        return min(self.c) if self.c else 0

    def _wfloor(self):
        return min(self.c) if self.c else inf

    def _wcap(self):
        return inf if self.cap is None else self.cap

    def valuation(self):
        if not self.c:
            raise ValueError("zero series has no valuation")
        return min(self.c)

    def coeff(self, e):
        if self.cap is not None and e >= self.cap:
            raise TruncationError(
                f"coefficient of {self.var}^{e} beyond cap {self.cap}")
        return self.c.get(e, ZERO)

    def __bool__(self):
        return bool(self.c)

    def is_zero_known(self):
        return not self.c

    # ---------- arithmetic ----------

    def _check(self, other):
        if other.var != self.var:
            raise TypeError(f"series variable mismatch: "
                            f"{self.var} vs {other.var}")

    def __add__(self, other):
        if not isinstance(other, TSeries):
            other = TSeries.const(self.var, other)
        self._check(other)
        cap = min(self._wcap(), other._wcap())
        c = {e: co for e, co in self.c.items() if e < cap}
        for e, co in other.c.items():
            if e < cap:
                s = c.get(e, ZERO) + co
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return TSeries._raw(self.var, c, None if cap == inf else int(cap))

    __radd__ = __add__

    def __neg__(self):
        return TSeries._raw(self.var, {e: -co for e, co in self.c.items()},
                            self.cap)

    def __sub__(self, other):
        if not isinstance(other, TSeries):
            other = TSeries.const(self.var, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k):
        """Multiply by a coefficient-ring element (no cap change)."""
        if is_scalar(k):
            k = QQ(k)
        if not k:
            return TSeries._raw(self.var, {}, self.cap)
        return TSeries._raw(self.var,
                            {e: co * k for e, co in self.c.items() if co * k},
                            self.cap)

    def shift(self, k):
        """Multiply by var**k."""
        cap = None if self.cap is None else self.cap + k
        return TSeries._raw(self.var, {e + k: co for e, co in self.c.items()},
                            cap)

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            return self.scale(other)
        self._check(other)
        f1, c1 = self._wfloor(), self._wcap()
        f2, c2 = other._wfloor(), other._wcap()
        cap = min(f1 + c2, f2 + c1)
        c = {}
        for e1, co1 in self.c.items():
            for e2, co2 in other.c.items():
                e = e1 + e2
                if e < cap:
                    p = co1 * co2
                    s = c.get(e)
                    c[e] = p if s is None else s + p
        c = {e: co for e, co in c.items() if co}
        return TSeries._raw(self.var, c, None if cap == inf else int(cap))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = TSeries.const(self.var, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncate(self, cap):
        newcap = cap if self.cap is None else min(self.cap, cap)
        return TSeries._raw(self.var,
                            {e: co for e, co in self.c.items() if e < newcap},
                            newcap)

    def inverse(self):
        """Multiplicative inverse; the leading coefficient must be a unit."""
        if not self.c:
            raise NonInvertibleLeadingTerm("cannot invert the zero series")
        v = self.valuation()
        lead_inv = _ring_inv(self.c[v])
        cap = self._wcap()
        if cap == inf:
            if len(self.c) == 1:
                return TSeries._raw(self.var, {-v: lead_inv}, None)
            raise NonInvertibleLeadingTerm(
                "inverse of an exact non-monomial series needs a cap; "
                "truncate() it first")
        out_cap = int(cap) - 2 * v
        t = {-v: lead_inv}
        # t known on [-v, out_cap); solve (self * t = 1) coefficientwise
        for k in range(1, out_cap + v):
            acc = None
            for j in range(1, k + 1):
                sj = self.c.get(v + j)
                if sj is None:
                    continue
                tj = t.get(-v + k - j)
                if tj is None:
                    continue
                term = sj * tj
                acc = term if acc is None else acc + term
            if acc is not None:
                val = -(acc * lead_inv)
                if val:
                    t[-v + k] = val
        return TSeries._raw(self.var, t, out_cap)

    def __truediv__(self, other):
        if isinstance(other, TSeries):
            return self * other.inverse()
        return self.scale(_ring_inv(other))

    def map_coeffs(self, f):
        c = {}
        for e, co in self.c.items():
            v = f(co)
            if v:
                c[e] = v
        return TSeries._raw(self.var, c, self.cap)

    def rename(self, var):
        return TSeries._raw(var, dict(self.c), self.cap)

    def __eq__(self, other):
        if isinstance(other, TSeries):
            return (self.var == other.var and self.cap == other.cap
                    and self.c == other.c)
        if not other:
            return not self.c
        return self.c == {0: other}

    __hash__ = None

    def same_upto(self, other, cap=None):
        """Equality of all coefficients on the common known window."""
        self._check(other)
        w = min(self._wcap(), other._wcap())
        if cap is not None:
            w = min(w, cap)
        if w is inf:
            return self.c == other.c
        for e in set(self.c) | set(other.c):
            if e < w and self.c.get(e, ZERO) != other.c.get(e, ZERO):
                return False
        return True

    def to_json(self):
        return [[e, _coeff_json(co)] for e, co in sorted(self.c.items())]

    def __repr__(self):
        caps = "" if self.cap is None else f" + O({self.var}^{self.cap})"
        terms = " + ".join(f"({co})*{self.var}^{e}"
                           for e, co in sorted(self.c.items())) or "0"
        return terms + caps


def require_cap(s, cap):
    if s._wcap() < cap:
        raise CapTooSmall(f"series only known below {s.cap}, need {cap}")
    return s


# ---------- elementary series ----------


def zeta_series(c, cap, floor=0, var="u"):
    """u-expansion of zeta(c*u) = e^{c u/2} - e^{-c u/2}; odd in u."""
    if cap <= 0:
        raise CapTooSmall("zeta_series needs cap > 0")
    c = QQ(c)
    out = {}
    if c:
        k = 1
        while k < cap:
            out[k] = c ** k / (2 ** (k - 1) * factorial(k))
            k += 2
    s = TSeries._raw(var, out, cap)
    if floor:
        # storage floor only; zeta itself has no singular part
        pass
    return s


def series_inverse(s):
    return s.inverse()


def exp_linear(c, cap, var="u"):
    """exp(c*u) as a truncated series."""
    c = QQ(c)
    return TSeries._raw(var, {k: c ** k / factorial(k)
                              for k in range(cap) if c or k == 0}, cap)


def binomial_series(c, e, order, var="U"):
    """(1 - c*U)**e = sum_k binom(e,k) (-c)^k U^k, truncated after U^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = {}
    power = 1  # (-c)^k in the coefficient ring
    for k in range(order + 1):
        b = qq_binomial(e, k)
        co = b * power if k else QQ(1)
        if co:
            coeffs[k] = co
        if k < order:
            power = power * (-c) if k else -c
    return TSeries._raw(var, coeffs, order + 1)


def compose(f, g):
    """f(g) for a series f with floor >= 0 and g with valuation >= 1."""
    if f.c and f.floor() < 0:
        raise BadValuation("composition needs a power series outer factor")
    if g.c and g.valuation() < 1:
        raise BadValuation("composition needs valuation >= 1 inner factor")
    res = TSeries.zero(g.var)
    top = max(f.c) if f.c else 0
    for e in range(top, -1, -1):
        res = res * g
        co = f.c.get(e)
        if co is not None:
            res = res + TSeries.const(g.var, co)
    if f.cap is not None:
        vg = g.valuation() if g.c else 1
        res = res.truncate(f.cap * vg)
    if g.cap is not None:
        res = res.truncate(g.cap)  # conservative; refined by window math above
    return res


def exp_series(s):
    """exp(s) for a series s with valuation >= 1."""
    if s.c and s.valuation() < 1:
        raise BadValuation("exp needs valuation >= 1")
    cap = s._wcap()
    if cap == inf:
        raise CapTooSmall("exp of an exact series needs a finite cap")
    res = TSeries.const(s.var, 1, cap=int(cap))
    term = TSeries.const(s.var, 1, cap=int(cap))
    v = s.valuation() if s.c else 1
    k = 1
    while k * v < cap:
        term = (term * s).scale(QQ(1, k))
        res = res + term
        k += 1
    return res


def log1p_series(s):
    """log(1 + s) for a series s with valuation >= 1."""
    if s.c and s.valuation() < 1:
        raise BadValuation("log1p needs valuation >= 1")
    cap = s._wcap()
    if cap == inf:
        raise CapTooSmall("log of an exact series needs a finite cap")
    res = TSeries.zero(s.var, cap=int(cap))
    term = TSeries.const(s.var, 1, cap=int(cap))
    v = s.valuation() if s.c else 1
    k = 1
    while k * v < cap:
        term = term * s
        res = res + term.scale(QQ(-1 if k % 2 == 0 else 1, k))
        k += 1
    return res


def lagrange_revert(s, order, outvar=None):
    """Compositional inverse r of s: s(r(L)) = L + O(L^{order+1}).

    s must have valuation exactly 1 with a unit leading coefficient.
    """
    if not s.c or s.valuation() != 1:
        raise BadValuation("reversion needs valuation exactly 1")
    lead_inv = _ring_inv(s.c[1])
    if s.cap is not None and s.cap < order + 1:
        raise CapTooSmall(f"need s known to order {order}, cap is {s.cap}")
    var = outvar or s.var
    sv = s.truncate(order + 1).rename(var)
    r = TSeries._raw(var, {1: lead_inv}, order + 1)
    for k in range(2, order + 1):
        comp = compose(sv, r)
        err = comp.c.get(k)
        if err:
            corr = -(err * lead_inv) if is_scalar(lead_inv) \
                else -(lead_inv * err)
            c = dict(r.c)
            c[k] = corr
            r = TSeries._raw(var, c, order + 1)
    return r


class MultiSeries:
    """Truncated power series in several variables (exponents >= 0)."""

    __slots__ = ("vars", "caps", "c")

    def __init__(self, variables, caps, coeffs=None):
        self.vars = tuple(variables)
        self.caps = tuple(caps)
        c = {}
        if coeffs:
            for exps, co in coeffs.items():
                exps = tuple(exps)
                if co and all(e < cp for e, cp in zip(exps, self.caps)):
                    c[exps] = co
        self.c = c

    @classmethod
    def _raw(cls, variables, caps, coeffs):
        self = object.__new__(cls)
        self.vars = variables
        self.caps = caps
        self.c = coeffs
        return self

    @classmethod
    def const(cls, variables, caps, s):
        out = cls(variables, caps)
        if is_scalar(s):
            s = QQ(s)
        if s:
            out.c[(0,) * len(out.vars)] = s
        return out

    @classmethod
    def inject(cls, ts, variables, caps, position):
        """Embed a single-variable power series as variable #position."""
        variables = tuple(variables)
        caps = tuple(caps)
        n = len(variables)
        c = {}
        for e, co in ts.c.items():
            if e < 0:
                raise BadValuation("inject needs a power series")
            if e < caps[position]:
                key = tuple(e if i == position else 0 for i in range(n))
                c[key] = co
        return cls._raw(variables, caps, c)

    def coeff(self, *exps):
        for e, cp in zip(exps, self.caps):
            if e >= cp:
                raise TruncationError(f"exponent {exps} beyond caps {self.caps}")
        return self.c.get(tuple(exps), ZERO)

    def total_valuation(self):
        return min((sum(e) for e in self.c), default=None)

    def _check(self, other):
        if self.vars != other.vars:
            raise TypeError("multiseries variable mismatch")

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            other = MultiSeries.const(self.vars, self.caps, other)
        self._check(other)
        caps = tuple(min(a, b) for a, b in zip(self.caps, other.caps))
        c = {e: co for e, co in self.c.items()
             if all(x < cp for x, cp in zip(e, caps))}
        for e, co in other.c.items():
            if all(x < cp for x, cp in zip(e, caps)):
                s = c.get(e, ZERO) + co
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        return MultiSeries._raw(self.vars, caps, c)

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries._raw(self.vars, self.caps,
                                {e: -co for e, co in self.c.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiSeries):
            other = MultiSeries.const(self.vars, self.caps, other)
        return self + (-other)

    def scale(self, k):
        if is_scalar(k):
            k = QQ(k)
        if not k:
            return MultiSeries._raw(self.vars, self.caps, {})
        return MultiSeries._raw(self.vars, self.caps,
                                {e: co * k for e, co in self.c.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return self.scale(other)
        self._check(other)
        caps = tuple(min(a, b) for a, b in zip(self.caps, other.caps))
        c = {}
        for e1, co1 in self.c.items():
            for e2, co2 in other.c.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                if all(x < cp for x, cp in zip(e, caps)):
                    p = co1 * co2
                    s = c.get(e)
                    c[e] = p if s is None else s + p
        return MultiSeries._raw(self.vars, caps,
                                {e: co for e, co in c.items() if co})

    __rmul__ = __mul__

    def log1p(self):
        """log(1 + self); needs total valuation >= 1."""
        v = self.total_valuation()
        if v is not None and v < 1:
            raise BadValuation("log1p needs total valuation >= 1")
        bound = max(sum(cp - 1 for cp in self.caps), 1)
        res = MultiSeries(self.vars, self.caps)
        term = MultiSeries.const(self.vars, self.caps, 1)
        for k in range(1, bound + 1):
            term = term * self
            if not term.c:
                break
            res = res + term.scale(QQ(-1 if k % 2 == 0 else 1, k))
        return res

    def map_coeffs(self, f):
        c = {}
        for e, co in self.c.items():
            v = f(co)
            if v:
                c[e] = v
        return MultiSeries._raw(self.vars, self.caps, c)

    def __eq__(self, other):
        if isinstance(other, MultiSeries):
            return (self.vars == other.vars and self.caps == other.caps
                    and self.c == other.c)
        return NotImplemented

    __hash__ = None

    def to_json(self):
        return [list(e) + [_coeff_json(co)] for e, co in sorted(self.c.items())]
