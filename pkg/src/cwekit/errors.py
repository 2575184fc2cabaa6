"""Exception types shared across the package."""


class CwekitError(Exception):
    """Base class for all errors raised by this package."""


class NotIrreducible(CwekitError):
    """A polynomial required to be irreducible over GF(p) is reducible."""


class NoSuchPrimitive(CwekitError):
    """A polynomial is irreducible but its roots do not generate GF(q)*."""


class SizeLimit(CwekitError):
    """The requested field exceeds the configured table cap."""


class DivisionByZero(CwekitError):
    """Multiplicative inverse of the zero element."""


class ZeroElement(CwekitError):
    """The zero element was passed where a nonzero element is required."""


class BadModulus(CwekitError):
    """A class/code order N does not divide the required group order."""


class BadBlockLength(CwekitError):
    """A block length does not divide the vector length it must split."""


class BadRange(CwekitError):
    """An index argument lies outside its admissible range."""


class EmptyDistribution(CwekitError):
    """An operation on a weight distribution with no terms."""


class ParadoxicalField(CwekitError):
    """An internal field identity that cannot fail did fail.

    Raised instead of silently skipping when one of the index-set
    defining sums evaluates to zero, which the admissible parameter
    ranges rule out.
    """
