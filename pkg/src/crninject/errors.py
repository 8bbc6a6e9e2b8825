"""Exception types shared across the package."""


class CrnInjectError(Exception):
    """Base class for all errors raised by this package."""


class NetworkError(CrnInjectError):
    """Invalid network structure (bad indices, reactant equal to product, ...)."""


class ParseError(CrnInjectError):
    """Syntax error in one of the text input formats.

    Carries the 1-based line and column of the offending token when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)


class PreconditionError(CrnInjectError):
    """An analysis was invoked outside the hypotheses it requires."""


class EvaluationDomainError(CrnInjectError):
    """A rate function was evaluated outside its domain of definition."""


class CircuitCapExceeded(CrnInjectError):
    """Circuit enumeration hit the configured cap before completing."""

    def __init__(self, cap, partial_count):
        self.cap = cap
        self.partial_count = partial_count
        super().__init__(
            f"circuit enumeration exceeded cap of {cap} (found {partial_count} so far)"
        )
