"""Exception types raised across the toolkit.

Each class carries the CLI exit code it maps to.
"""


class WhMilnorError(Exception):
    exit_code = 1


class HypothesisViolation(WhMilnorError):
    """A mathematical precondition does not hold (non-homogeneous input, ...)."""

    exit_code = 1


class ResourceLimitExceeded(WhMilnorError):
    exit_code = 3


class ParseError(WhMilnorError, ValueError):
    exit_code = 2

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class VariableMismatch(WhMilnorError, ValueError):
    exit_code = 2
