"""Exact rational scalars.

gmpy2.mpq when available (an order of magnitude faster on the large
numerators the exact series kernels produce), fractions.Fraction otherwise.
Everything in the package goes through the QQ alias so the two stay
interchangeable.
"""

from math import factorial

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)

_QQ_TYPE = type(QQ(0))


def qq(num, den=1):
    return QQ(num) / QQ(den) if den != 1 else QQ(num)


def is_scalar(x):
    """True for the plain ring scalars (int, QQ)."""
    return isinstance(x, (int, _QQ_TYPE))


def rat_str(x):
    """Canonical "p/q" string, denominator always explicit and positive."""
    x = QQ(x)
    return f"{x.numerator}/{x.denominator}"


def qq_from_str(s):
    num, _, den = s.partition("/")
    return QQ(int(num), int(den)) if den else QQ(int(num))


def qq_binomial(e, k):
    """Generalized binomial coefficient binom(e, k), e rational, k an int."""
    if k < 0:
        return ZERO
    e = QQ(e)
    num = ONE
    for j in range(k):
        num *= e - j
    return num / factorial(k)
