"""Exception types shared across the package.

Every error raised by the library API is a subclass of TaniapnError, so
callers (notably the CLI) can map library failures to exit codes without
catching bare exceptions.
"""


class TaniapnError(Exception):
    """Base class for all library errors."""


class InvalidParams(TaniapnError):
    """Structurally invalid parameters (degree, coprimality, range, modulus)."""


class ZeroInverse(InvalidParams):
    """Multiplicative inverse of zero requested."""


class ZeroInput(InvalidParams):
    """Zero passed where a nonzero field element is required."""


class ZeroAlpha(InvalidParams):
    """alpha = 0 passed to a transformation that divides by alpha."""


class InvalidK(InvalidParams):
    """Frobenius parameter k not coprime to the field degree."""


class NotFrobeniusClosed(TaniapnError):
    """Set is not closed under the squaring map."""


class NotApn(TaniapnError):
    """Operation defined only for APN members of the family."""


class DegreeMismatch(TaniapnError):
    """Operands live over different field contexts."""


class TooLarge(TaniapnError):
    """Instance exceeds the documented exhaustive-scan guard."""


class NonIntegralOrbitCount(TaniapnError):
    """Internal consistency failure: a divisor sum term N(m')/m' did not divide."""
