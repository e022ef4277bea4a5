"""Exception types raised across the package."""


class CosetForgeError(Exception):
    """Base class for all package errors."""


class LengthMismatchError(CosetForgeError, ValueError):
    """Two words (or a word and a code) disagree on length."""


class DegenerateCodeError(CosetForgeError, ValueError):
    """The parity-check matrix describes a code with k = 0 or k = n."""


class GuardExceededError(CosetForgeError, RuntimeError):
    """A size guard (codewords, cosets, oracle length) would be exceeded."""


class MatrixFormatError(CosetForgeError, ValueError):
    """A parity-check matrix file could not be parsed."""


class NotATestSetError(CosetForgeError, RuntimeError):
    """Gradient descent stalled outside the coset-leader set."""
