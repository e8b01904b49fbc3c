"""Exact-arithmetic colored HOMFLY-PT data of torus knots.

Three independent routes to the coefficients of the extended Ooguri-Vafa
partition function (Rosso-Jones, cut-and-join, free-fermion correlators),
plus verification suites for the Jacobi-polynomial identities, the spectral
curve expansions, quasi-polynomiality of connected correlators, and the
quantum spectral curve.  Every computation is exact; every check is a
zero-tolerance identity of rational/series objects.
"""

from .knot import KnotParams
from .laurent import LaurentPoly, RationalFunction
from .ratio import QQ, qq
from .series import (MultiSeries, TSeries, binomial_series, lagrange_revert,
                     series_inverse, zeta_series)

__all__ = [
    "KnotParams",
    "LaurentPoly",
    "RationalFunction",
    "QQ",
    "qq",
    "MultiSeries",
    "TSeries",
    "binomial_series",
    "lagrange_revert",
    "series_inverse",
    "zeta_series",
]

__version__ = "0.1.0"
