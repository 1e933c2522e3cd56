"""Exception types shared across the package."""


class QacError(Exception):
    """Base class for all package errors."""


class DivisionFailure(QacError):
    """Exact Laurent division has a nonzero remainder."""


class NonInvertibleSubstitution(QacError):
    """A negative exponent met a non-monomial substitution image."""


class UnsupportedVariable(QacError):
    """An operation received a variable family it does not handle."""


class ParseError(QacError):
    """Canonical text form could not be parsed."""


class EmptyWindow(QacError):
    """A quiver window contains no vertex."""


class FrozenVertex(QacError):
    """Mutation was requested at a frozen vertex."""


class NotHomogeneousError(QacError):
    """A polynomial is not multihomogeneous; carries the offending degrees."""


class NotNegative(QacError):
    """An l-weight expected to be negative is not."""


class NotPositive(QacError):
    """An l-weight expected to be positive is not."""


class NotSl2(QacError):
    """An operation restricted to rank one received other Cartan data."""


class NotComparableWindow(QacError):
    """The dominance certificate window cannot settle the comparison."""


class NoUniqueTop(QacError):
    """A polynomial has no unique maximal-weight term."""


class DepthMismatch(QacError):
    """Two truncated characters were compared at different depths."""


class UnknownFixture(QacError):
    """No fixture is registered under the requested name."""


class UnsupportedCase(QacError):
    """A conjecture case outside the implemented reductions was requested."""
