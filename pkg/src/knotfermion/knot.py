"""Torus-knot parameters and the A-hat exponent bookkeeping.

All fractional powers of the HOMFLY-PT variable A are integer powers of
ahat = A^(1/Q), fixed per knot, so that quantities like A^(b+1) with
b = P/Q stay inside the Laurent ring in the single variable "ah".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .laurent import LaurentPoly
from .ratio import QQ

AH = ("ah",)


@dataclass(frozen=True)
class KnotParams:
    """The (Q, P) torus knot, its framing integer gamma, and b = P/Q."""

    Q: int
    P: int
    gamma: int = field(init=False)

    def __post_init__(self):
        if self.Q < 1 or self.P < 1:
            raise ValueError("Q and P must be positive")
        if gcd(self.P, self.Q) != 1:
            raise ValueError("gcd(P, Q) must be 1")
        g = next(g for g in range(self.Q)
                 if (self.P * g + 1) % self.Q == 0)
        object.__setattr__(self, "gamma", g)

    @property
    def b(self):
        return QQ(self.P, self.Q)

    def A_pow(self, c):
        """A**c as a monomial in ahat; c*Q must be an integer."""
        e = QQ(c) * self.Q
        if e.denominator != 1:
            raise ValueError(f"A^{c} is not an integer power of A^(1/{self.Q})")
        return LaurentPoly.monomial(AH, (int(e),))

    def a_pow(self, k=1):
        """a**k = A**(2k)."""
        return self.A_pow(2 * k)

    def A_plus(self):
        return self.A_pow(self.b + 1)

    def A_minus(self):
        return self.A_pow(self.b - 1)

    def A_diff(self, i):
        """A**i - A**(-i)."""
        return self.A_pow(i) - self.A_pow(-i)

    def subs_a(self, poly_in_a, extra=()):
        """Map a polynomial in the variable "a" (= A^2) into the ah ring."""
        return poly_in_a.subs_power("a", "ah", 2 * self.Q)
