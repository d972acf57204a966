"""Exception types raised across the package."""


class LctError(ValueError):
    """Base class for all errors raised by lctbank."""


class NonUnimodular(LctError):
    pass


class NonPositiveB(LctError):
    pass


class PeriodMismatch(LctError):
    pass


class InconsistentPair(LctError):
    pass


class EvenOrder(LctError):
    pass


class InvalidOrder(LctError):
    pass


class NegativeSpectrum(LctError):
    pass


class RootFindingFailure(LctError):
    pass


class GridTooCoarse(LctError):
    pass


class ParseError(LctError):
    """Malformed input file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BankMismatch(LctError):
    """Stored filters disagree with the ones recomputed from h0."""
