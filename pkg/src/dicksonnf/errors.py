"""Exception hierarchy shared by all modules.

Every domain error derives from DicksonError so the CLI can map any failure
to a single error report with a stable code (the class name).
"""


class DicksonError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NotPrime(DicksonError):
    pass


class NotIrreducible(DicksonError):
    pass


class NotGenerator(DicksonError):
    pass


class DivisionByZero(DicksonError):
    pass


class ZeroArgument(DicksonError):
    pass


class NotDicksonPair(DicksonError):
    pass


class TooLarge(DicksonError):
    pass


class DimensionMismatch(DicksonError):
    pass


class MixedContexts(DicksonError):
    pass


class OutOfRange(DicksonError):
    pass


class PreconditionViolated(DicksonError):
    pass


class ParseError(DicksonError):
    pass
