"""Exception types raised by the library.

Every error derives from :class:`ShuffleSymError` so callers (and the CLI)
can catch the whole family at once.
"""


class ShuffleSymError(Exception):
    """Base class for all library errors."""


class InvalidParams(ShuffleSymError, ValueError):
    """Shuffle parameters are negative or do not sum to one."""


class DegenerateEvaluation(ShuffleSymError, ArithmeticError):
    """A q-analogue was evaluated at an inadmissible point."""


class EnumerationTooLarge(ShuffleSymError):
    """Exact enumeration would exceed the configured budget."""


class SizeMismatch(ShuffleSymError, ValueError):
    """Two objects that must share a deck size do not."""


class ZeroSymbol(ShuffleSymError, ValueError):
    """A signed word still contains unresolved zero symbols."""


class InvalidPair(ShuffleSymError, ValueError):
    """A tableau pair is not in the image of BRKV insertion."""


class SymbolDivergence(ShuffleSymError, ArithmeticError):
    """A Toeplitz symbol's coefficients are not summable."""


class CapExceeded(ShuffleSymError):
    """A computation was requested beyond its size cap."""


class NegativeMultiplicity(ShuffleSymError, ValueError):
    """A count of geometric summands came out negative."""


class BoundaryParameter(ShuffleSymError, ValueError):
    """A geometric parameter reached 1, so the law is undefined."""


class DuplicateX(ShuffleSymError, ValueError):
    """Two points of a configuration share an x coordinate."""


class TooManyPoints(ShuffleSymError):
    """Brute-force search was asked for too many points."""
