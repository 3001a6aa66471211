"""Exception hierarchy.

Every error raised by the library derives from :class:`ZModNError`; the CLI
maps each family onto an exit code.
"""


class ZModNError(Exception):
    exit_code = 1


class DomainError(ZModNError, ValueError):
    """Input outside an operation's domain (n = 0, element out of range, ...)."""

    exit_code = 2


class IndexOutOfRange(DomainError):
    """Cohomology index below the first position where the complex exists."""


class ArithmeticOverflow(ZModNError, OverflowError):
    """A value exceeds the exact-arithmetic bound."""

    exit_code = 2


class VerificationError(ZModNError):
    """A closed form disagrees with its brute-force recomputation."""

    exit_code = 3


class ComplexViolation(VerificationError):
    """Consecutive multiplication maps do not compose to zero."""


class StructuralViolation(VerificationError):
    """A set expected to be a subgroup is not closed under addition."""


class ResourceError(ZModNError):
    """An enumeration would exceed the configured bound."""

    exit_code = 4
