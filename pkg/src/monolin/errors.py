"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so each class corresponds to one
failure family rather than one call site.
"""


class MonolinError(Exception):
    """Base class for all library errors."""


class ContextError(MonolinError):
    """Objects from different ring contexts were combined."""


class DomainError(MonolinError):
    """Input is outside the mathematical domain of an operation."""


class ArgumentError(MonolinError, ValueError):
    """Malformed argument, e.g. an invalid permutation or index."""


class DivisibilityError(MonolinError, ArithmeticError):
    """Monomial quotient requested without divisibility."""


class ResourceError(MonolinError):
    """A configured size cap was exceeded."""


class ParseError(MonolinError):
    """Text input could not be parsed.

    ``position`` is the 0-based character offset of the problem within
    ``text`` when known.
    """

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            message = f"{message} at position {position}\n  {text}\n  {' ' * position}^"
        super().__init__(message)
