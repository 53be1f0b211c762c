"""Exception types raised across the package."""


class DyadicError(Exception):
    """Base class for all package errors."""


class WordSyntaxError(DyadicError, ValueError):
    """Text is not a valid bottomed word or stream."""


class IncompatibleOperands(DyadicError, ValueError):
    """Two sequences carry opposite digits at some position."""


class IncompatibleSet(DyadicError, ValueError):
    """A finite set of words has no upper bound in T*."""


class WrongSpace(DyadicError, ValueError):
    """Operands or points belong to different spaces."""


class NotInSpace(DyadicError, ValueError):
    """A point was deleted from (or never belonged to) the space."""


class UnsaturatedRegion(DyadicError, ValueError):
    """A region splits a glue class."""


class EmptyBase(DyadicError, ValueError):
    """Relativizing to a word whose base set is empty."""


class BudgetExceeded(DyadicError, RuntimeError):
    """An enumeration would exceed the configured word budget."""


class NonTotalInput(DyadicError, ValueError):
    """A total (bottom-free) sequence was required."""


class OutOfRange(DyadicError, ValueError):
    """A real argument lies outside the unit interval."""


class SchemaError(DyadicError, ValueError):
    """A JSON document does not describe a valid space or subbase."""


class IndexBeyondSubbase(DyadicError, IndexError):
    """A finite subbase was queried past its last pair."""
