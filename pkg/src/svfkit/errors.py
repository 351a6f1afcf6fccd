"""Exception types shared across the toolkit."""


class SvfkitError(Exception):
    """Base class for all toolkit errors."""


class MalformedInterval(SvfkitError):
    """An interval violates lo <= hi or endpoint openness rules."""


class OutOfDomain(SvfkitError):
    """A time value or time set lies outside the declared domain."""


class DomainBoundedAbove(SvfkitError):
    """Behaviour at infinity was requested on a domain with a finite supremum."""


class IsolatedPoint(SvfkitError):
    """The domain does not accumulate at the requested point from the requested side."""


class UniverseMismatch(SvfkitError):
    """Two finite sets (or a set and a function) live over different universes."""


class UnsupportedKind(SvfkitError):
    """The requested family kind does not support this operation."""


class NoAnalyticDerivative(SvfkitError):
    """The family carries no analytic derivative; use central differences."""


class ShapeMismatch(SvfkitError):
    """Point clouds disagree in length or spatial dimension."""


class BadIndex(SvfkitError):
    """Sequence indices start at 1."""


class UnknownTheorem(SvfkitError):
    """No theorem suite is registered under this tag."""


class ParseError(SvfkitError):
    """A scenario file is malformed or violates the strict schema."""


class UnknownCommand(SvfkitError):
    """A scenario task names a command that does not exist."""
