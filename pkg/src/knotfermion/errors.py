"""Exception types shared across the package."""


class KnotFermionError(Exception):
    """Base class for all package-specific errors."""


class NonInvertibleLeadingTerm(KnotFermionError):
    """Series inversion hit a leading coefficient that is not a unit."""


class BadValuation(KnotFermionError):
    """Series reversion needs valuation exactly 1 with a unit leading term."""


class WeightMismatch(KnotFermionError):
    """Character evaluation with |lambda| != |sigma|."""


class CapTooSmall(KnotFermionError):
    """Requested truncation cap cannot hold the result."""


class TruncationError(KnotFermionError):
    """A coefficient at or beyond the truncation cap was requested."""


class StabilityError(KnotFermionError):
    """(n, k) outside the stable range of the quasi-polynomiality statement."""


# genus-slice extraction below the series floor uses the same condition
StabilityRange = StabilityError


class FitFailed(KnotFermionError):
    """An exact linear fit turned out inconsistent at the degree bound."""


class SampleAtPole(KnotFermionError):
    """A sample point hit a pole of the expression being evaluated."""
