"""Exception hierarchy shared by all modules."""


class ChowStrataError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ChowStrataError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegreeBoundError(ChowStrataError, ArithmeticError):
    """A monomial exceeded the configured total-degree bound."""


class MultiplicityError(DomainError):
    """A tree has a vertex of degree larger than the operation supports."""


class LocalizationError(DomainError):
    """An equivariant class on P^1 does not satisfy the image condition."""


class ConsistencyError(ChowStrataError, AssertionError):
    """An internal invariant failed; indicates a bug or corrupt input."""
