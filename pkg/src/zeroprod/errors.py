"""Exception hierarchy shared by all zeroprod modules."""


class ZeroprodError(Exception):
    """Base class for all errors raised by this package."""


class ZeroDenominatorError(ZeroprodError, ZeroDivisionError):
    """A rational was requested with denominator zero."""


class InvalidInputError(ZeroprodError, ValueError):
    """An argument violates an operation's stated precondition."""


class ExcludedRingError(ZeroprodError, ValueError):
    """The requested ring is one of the excluded degenerate cases.

    The zero ring (modulus 1) and rings without a multiplicative identity
    both force the zero-product probability to 1, so they carry no
    information about bounds and are rejected at construction.
    """


class ResourceLimitError(ZeroprodError):
    """An enumeration-based operation refused a ring above its cap."""


class ContractViolationError(ZeroprodError, ValueError):
    """A caller broke an explicit contract (e.g. factoring a prime)."""


class OracleMismatchError(ZeroprodError):
    """Two routes that must agree produced different values."""


class RingParseError(ZeroprodError, ValueError):
    """The ring grammar could not be parsed."""
