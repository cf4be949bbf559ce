"""Exception hierarchy shared by every module in the package."""


class UnaryEccError(Exception):
    """Base class for all errors raised by unary_ecc."""


class MalformedCodeword(UnaryEccError, ValueError):
    """A variable-length codeword is truncated or carries trailing symbols."""


class NotACodeword(UnaryEccError, ValueError):
    """A fixed-length word is not a member of the code."""


class RangeError(UnaryEccError, ValueError):
    """An argument lies outside the domain of the operation."""


class LengthMismatch(UnaryEccError, ValueError):
    """Two bitstrings (or a bitstring and a code) disagree on length."""


class OutOfRange(UnaryEccError, IndexError):
    """An error-pattern position falls outside the word it is applied to."""


class InvalidDistribution(UnaryEccError, ValueError):
    """Probabilities are negative or do not sum to one."""


class Infeasible(UnaryEccError, RuntimeError):
    """The requested exhaustive enumeration is too large to run."""


class EmptyTrainingSet(UnaryEccError, ValueError):
    """A network was asked to train on zero samples."""
