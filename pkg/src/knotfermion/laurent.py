"""Sparse exact Laurent polynomials in named variables, and rational functions.

LaurentPoly is the workhorse coefficient ring of the package: exponents may
be negative, coefficients are exact rationals, variables are named so that
objects from different contexts cannot be mixed silently.  Values are
immutable; every operation returns a fresh object.

RationalFunction is a quotient of two LaurentPoly in the same variables.
In the univariate case it is kept gcd-reduced with a normalized denominator
(valuation 0, primitive integer coefficients, positive leading coefficient);
in the multivariate case only monomial/content normalization is applied and
equality goes through cross-multiplication.
"""

from __future__ import annotations

from math import gcd as _int_gcd

from .errors import NonInvertibleLeadingTerm
from .ratio import QQ, ZERO, is_scalar, rat_str


class LaurentPoly:
    __slots__ = ("vars", "c")

    def __init__(self, variables, coeffs=None):
        self.vars = tuple(variables)
        clean = {}
        if coeffs:
            n = len(self.vars)
            for exps, co in coeffs.items():
                co = QQ(co)
                if co:
                    exps = tuple(exps)
                    if len(exps) != n:
                        raise ValueError("exponent arity != variable arity")
                    clean[exps] = co
        self.c = clean

    @classmethod
    def _raw(cls, variables, coeffs):
        """Internal constructor: coeffs already pruned and typed."""
        self = object.__new__(cls)
        self.vars = variables
        self.c = coeffs
        return self

    # ---------- constructors ----------

    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), {})

    @classmethod
    def const(cls, variables, s):
        variables = tuple(variables)
        s = QQ(s)
        if not s:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): s})

    @classmethod
    def one(cls, variables):
        return cls.const(variables, 1)

    @classmethod
    def monomial(cls, variables, exps, coeff=1):
        variables = tuple(variables)
        coeff = QQ(coeff)
        if not coeff:
            return cls._raw(variables, {})
        return cls._raw(variables, {tuple(exps): coeff})

    @classmethod
    def gen(cls, variables, name, power=1):
        variables = tuple(variables)
        exps = tuple(power if v == name else 0 for v in variables)
        if name not in variables:
            raise KeyError(name)
        return cls._raw(variables, {exps: QQ(1)})

    # ---------- structure ----------

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.c)

    def constant_value(self):
        if not self.c:
            return ZERO
        if not self.is_constant():
            raise ValueError("not a constant")
        return next(iter(self.c.values()))

    def is_monomial(self):
        return len(self.c) == 1

    def leading_term(self):
        """(exps, coeff) at the lexicographically largest exponent tuple."""
        exps = max(self.c)
        return exps, self.c[exps]

    def coeff_of(self, *exps):
        return self.c.get(tuple(exps), ZERO)

    def degree(self, name):
        i = self.vars.index(name)
        return max(e[i] for e in self.c) if self.c else 0

    def valuation(self, name):
        i = self.vars.index(name)
        return min(e[i] for e in self.c) if self.c else 0

    def terms(self):
        return sorted(self.c.items())

    # ---------- ring operations ----------

    def _coerce(self, other):
        if is_scalar(other):
            return LaurentPoly.const(self.vars, other)
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise TypeError(
                    f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self.c)
        for exps, co in other.c.items():
            s = c.get(exps, ZERO) + co
            if s:
                c[exps] = s
            else:
                c.pop(exps, None)
        return LaurentPoly._raw(self.vars, c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.vars, {e: -co for e, co in self.c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            other = QQ(other)
            if not other:
                return LaurentPoly._raw(self.vars, {})
            return LaurentPoly._raw(
                self.vars, {e: co * other for e, co in self.c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        if len(a) > len(b):
            a, b = b, a
        c = {}
        n = len(self.vars)
        if n == 1:
            for (ea,), ca in a.items():
                for (eb,), cb in b.items():
                    k = (ea + eb,)
                    s = c.get(k)
                    c[k] = ca * cb if s is None else s + ca * cb
        else:
            for ea, ca in a.items():
                for eb, cb in b.items():
                    k = tuple(x + y for x, y in zip(ea, eb))
                    s = c.get(k)
                    c[k] = ca * cb if s is None else s + ca * cb
        return LaurentPoly._raw(self.vars, {e: co for e, co in c.items() if co})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            inv = self.monomial_inverse()
            return inv ** (-k)
        result = LaurentPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            other = QQ(other)
            return LaurentPoly._raw(
                self.vars, {e: co / other for e, co in self.c.items()})
        if isinstance(other, LaurentPoly):
            return self * other.monomial_inverse()
        return NotImplemented

    def monomial_inverse(self):
        if len(self.c) != 1:
            raise NonInvertibleLeadingTerm(
                "only monomials are units in the Laurent ring")
        (exps, co), = self.c.items()
        return LaurentPoly._raw(
            self.vars, {tuple(-e for e in exps): 1 / QQ(co)})

    def __eq__(self, other):
        if is_scalar(other):
            if not other:
                return not self.c
            return self.is_constant() and self.constant_value() == QQ(other)
        if isinstance(other, LaurentPoly):
            return self.vars == other.vars and self.c == other.c
        return NotImplemented

    __hash__ = None

    # ---------- substitution and mapping ----------

    def map_coeffs(self, f):
        c = {}
        for exps, co in self.c.items():
            v = f(co)
            if v:
                c[exps] = v
        return LaurentPoly._raw(self.vars, c)

    def lift(self, variables):
        """Embed into a superset of variables."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        n = len(variables)
        c = {}
        for exps, co in self.c.items():
            k = [0] * n
            for p, e in zip(pos, exps):
                k[p] = e
            c[tuple(k)] = co
        return LaurentPoly._raw(variables, c)

    def drop_var(self, name):
        """Remove a variable that no term actually uses."""
        i = self.vars.index(name)
        if any(e[i] for e in self.c):
            raise ValueError(f"{name} occurs with nonzero exponent")
        newvars = self.vars[:i] + self.vars[i + 1:]
        return LaurentPoly._raw(
            newvars, {e[:i] + e[i + 1:]: co for e, co in self.c.items()})

    def subs_power(self, name, newname, k):
        """Substitute name -> newname**k (k a nonzero integer)."""
        i = self.vars.index(name)
        newvars = tuple(newname if v == name else v for v in self.vars)
        c = {}
        for exps, co in self.c.items():
            e = list(exps)
            e[i] = e[i] * k
            key = tuple(e)
            s = c.get(key, ZERO) + co
            if s:
                c[key] = s
            else:
                c.pop(key, None)
        return LaurentPoly._raw(newvars, c)

    def subs(self, name, value):
        """Substitute a scalar or LaurentPoly for one variable.

        Negative exponents require the value to be invertible (a nonzero
        scalar or a monomial).
        """
        i = self.vars.index(name)
        restvars = self.vars[:i] + self.vars[i + 1:]
        if is_scalar(value):
            value = QQ(value)
            out = {}
            powcache = {}
            for exps, co in self.c.items():
                e = exps[i]
                p = powcache.get(e)
                if p is None:
                    if e < 0 and not value:
                        raise ZeroDivisionError("0 ** negative in subs")
                    p = powcache[e] = value ** e
                key = exps[:i] + exps[i + 1:]
                s = out.get(key, ZERO) + co * p
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
            return LaurentPoly._raw(restvars, out)
        if not isinstance(value, LaurentPoly):
            raise TypeError("subs value must be a scalar or LaurentPoly")
        allvars = restvars + tuple(v for v in value.vars if v not in restvars)
        nrest = len(restvars)
        out = {}
        powcache = {0: LaurentPoly.one(allvars)}
        vlift = value.lift(allvars)
        for exps, co in self.c.items():
            e = exps[i]
            if e not in powcache:
                powcache[e] = vlift ** e
            rest = exps[:i] + exps[i + 1:] + (0,) * (len(allvars) - nrest)
            for pexps, pco in powcache[e].c.items():
                key = tuple(x + y for x, y in zip(rest, pexps))
                s = out.get(key, ZERO) + co * pco
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return LaurentPoly._raw(allvars, out)

    def eval_scalar(self, **assignments):
        out = self
        for name, v in assignments.items():
            out = out.subs(name, v)
        if out.vars:
            if not out.is_constant():
                raise ValueError("unassigned variables remain")
        return out.constant_value()

    def deriv(self, name):
        i = self.vars.index(name)
        c = {}
        for exps, co in self.c.items():
            e = exps[i]
            if e:
                k = exps[:i] + (e - 1,) + exps[i + 1:]
                c[k] = c.get(k, ZERO) + co * e
        return LaurentPoly._raw(self.vars, {e: co for e, co in c.items() if co})

    # ---------- normalization helpers ----------

    def content(self):
        """Positive rational c with self/c having coprime integer coeffs."""
        if not self.c:
            return QQ(1)
        num = 0
        den = 1
        for co in self.c.values():
            num = _int_gcd(num, int(co.numerator))
            den = den * int(co.denominator) // _int_gcd(den, int(co.denominator))
        return QQ(num, den)

    def to_json(self):
        return [list(e) + [rat_str(co)] for e, co in sorted(self.c.items())]

    def __repr__(self):
        if not self.c:
            return f"LaurentPoly({self.vars}, 0)"
        parts = []
        for exps, co in sorted(self.c.items()):
            mono = "*".join(f"{v}^{e}" for v, e in zip(self.vars, exps) if e)
            parts.append(f"{co}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


# ---------- univariate polynomial gcd (for RationalFunction) ----------


def _uni_coeffs(p):
    """Laurent p in one variable -> (valuation, dense coefficient list)."""
    if not p.c:
        return 0, []
    exps = sorted(e for (e,) in p.c)
    lo, hi = exps[0], exps[-1]
    dense = [ZERO] * (hi - lo + 1)
    for (e,), co in p.c.items():
        dense[e - lo] = co
    return lo, dense


def _from_dense(variables, val, dense):
    return LaurentPoly(variables, {(val + i,): co for i, co in enumerate(dense)})


def _dense_mod(a, b):
    """Remainder of dense polynomial division over QQ."""
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and not a[-1]:
            a.pop()
        if len(a) - 1 < db:
            break
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] -= q * bi
        a.pop()
    while a and not a[-1]:
        a.pop()
    return a


def uni_gcd(p, q):
    """Monic gcd of two univariate LaurentPoly (as honest polynomials)."""
    _, a = _uni_coeffs(p)
    _, b = _uni_coeffs(q)
    while b:
        a, b = b, _dense_mod(a, b)
    if not a:
        return LaurentPoly.zero(p.vars)
    lead = a[-1]
    return _from_dense(p.vars, 0, [x / lead for x in a])


def uni_divexact(p, d):
    """Exact division of univariate Laurent p by d; raises if not exact."""
    vp, a = _uni_coeffs(p)
    vd, b = _uni_coeffs(d)
    if not b:
        raise ZeroDivisionError
    if not a:
        return LaurentPoly.zero(p.vars)
    out = [ZERO] * (len(a) - len(b) + 1)
    while any(a):
        while a and not a[-1]:
            a.pop()
            if len(a) < len(b):
                break
        if len(a) < len(b):
            break
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        out[shift] = q
        for i, bi in enumerate(b):
            a[shift + i] -= q * bi
        a.pop()
    if any(a):
        raise ValueError("division not exact")
    return _from_dense(p.vars, vp - vd, out)


class RationalFunction:
    """Quotient num/den of LaurentPoly over the same variables."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.one(num.vars)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num.vars != den.vars:
            raise TypeError("variable mismatch in rational function")
        num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num, den):
        # pull the denominator's monomial part into the numerator
        shifts = tuple(den.valuation(v) for v in den.vars)
        if any(shifts):
            unshift = LaurentPoly.monomial(
                den.vars, tuple(-s for s in shifts))
            num = num * unshift
            den = den * unshift
        if len(den.vars) == 1 and num and len(den.c) > 1:
            g = uni_gcd(num, den)
            if g.degree(den.vars[0]) > 0:
                num = uni_divexact(num, g)
                den = uni_divexact(den, g)
        # primitive denominator with positive leading coefficient
        scale = den.content()
        if den.c and den.leading_term()[1] < 0:
            scale = -scale
        if scale != 1:
            num = num / scale
            den = den / scale
        return num, den

    @classmethod
    def const(cls, variables, s):
        return cls(LaurentPoly.const(variables, s))

    def __bool__(self):
        return bool(self.num)

    def _coerce(self, other):
        if is_scalar(other):
            return RationalFunction(LaurentPoly.const(self.num.vars, other))
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, RationalFunction):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return RationalFunction(self.den, self.num) ** (-k)
        return RationalFunction(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def eval_scalar(self, **assignments):
        n = self.num.eval_scalar(**assignments)
        d = self.den.eval_scalar(**assignments)
        return n / d

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"
