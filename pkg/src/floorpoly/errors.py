"""Exception hierarchy shared across floorpoly."""


class FloorPolyError(Exception):
    pass


class FieldMismatchError(FloorPolyError, ValueError):
    """Operands live in different quadratic fields Q(sqrt(d1)) != Q(sqrt(d2))."""


class NotRationalError(FloorPolyError, ValueError):
    """A non-constant coefficient is irrational where a rational one is required."""


class BudgetExceeded(FloorPolyError):
    """A scan would exceed its configured period or sample budget."""

    def __init__(self, message, **budget):
        super().__init__(message)
        self.budget = budget


class SearchExhausted(FloorPolyError):
    """A bounded witness search ran out of candidates without a result."""

    def __init__(self, message, **budget):
        super().__init__(message)
        self.budget = budget


class PreconditionError(FloorPolyError, ValueError):
    pass


class CertificateError(FloorPolyError, ValueError):
    """A certificate is malformed or does not match its context.

    Distinct from a well-formed certificate whose claim is false, for which
    the verifier returns False.
    """


class ParseError(FloorPolyError, ValueError):
    def __init__(self, message, position=None, expected=None):
        if position is not None:
            message = f"{message} at position {position}"
        if expected:
            message = f"{message} (expected {expected})"
        super().__init__(message)
        self.position = position
        self.expected = expected
