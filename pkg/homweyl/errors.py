"""Exception hierarchy shared by the algebra modules, the CLI and the service."""


class WeylError(Exception):
    """Base class for every error raised by homweyl."""

    exit_code = 1


class DimensionError(WeylError):
    """Operands live in algebras of different dimension, or a vector has the wrong length."""

    exit_code = 3


class IndexRangeError(DimensionError):
    """A generator index lies outside 1..n."""


class ExprSyntaxError(WeylError):
    """Malformed expression text."""

    exit_code = 2

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedProductError(ExprSyntaxError):
    """Associative and star products mixed in one chain without parentheses."""


class ClassificationError(WeylError):
    """No isomorphism exists between the requested twisted Weyl algebras."""


class ZeroInputError(WeylError):
    """The zero element was passed where a nonzero element is required."""

    exit_code = 2


class ArityError(WeylError):
    """A command received the wrong number of expressions or a missing option."""

    exit_code = 2
