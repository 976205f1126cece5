"""Exception hierarchy. Every error is a ``ValueError`` subclass."""


class ToeplitzError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidWordError(ToeplitzError):
    """A word or partial word failed to parse or validate."""


class InvalidSpecError(ToeplitzError):
    """A (modulus, generator) pair violates its invariants."""


class DomainError(ToeplitzError):
    """An argument is outside the domain of the operation."""


class IndexOverflowError(ToeplitzError):
    """An index computation left the supported range [1, 2**64 - 1]."""


class StreamExhaustedError(ToeplitzError):
    """A contractually infinite letter stream ran out."""


class PreconditionError(ToeplitzError):
    """An operation was called outside its precondition.

    ``condition`` is a short machine-readable tag for the violated hypothesis.
    """

    def __init__(self, message: str, condition: str = "precondition"):
        super().__init__(message)
        self.condition = condition
