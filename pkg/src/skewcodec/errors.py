"""Exception hierarchy shared by every module of the package."""


class SkewCodecError(Exception):
    """Base class for all package errors."""


class FieldError(SkewCodecError, ValueError):
    pass


class NotPrime(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class DivByZero(SkewCodecError, ZeroDivisionError):
    pass


class ContextMismatch(SkewCodecError, ValueError):
    pass


class NonUnitLead(SkewCodecError, ValueError):
    """Division by a polynomial whose leading coefficient is not invertible."""


class ZeroInput(SkewCodecError, ValueError):
    pass


class BothZero(ZeroInput):
    pass


class BudgetExceeded(SkewCodecError, RuntimeError):
    """A search hit its work budget.

    ``partial`` carries whatever was found before stopping (bounds, candidates,
    a resume token) so callers can report something useful.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NotADivisor(SkewCodecError, ValueError):
    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which


class RankDeficient(SkewCodecError, ArithmeticError):
    pass


class OrderMismatch(SkewCodecError, ValueError):
    """ord(theta) does not divide the block length where centrality is needed."""


class ShapeMismatch(SkewCodecError, ValueError):
    pass


class DenominatorNotDivisor(SkewCodecError, ArithmeticError):
    pass


class OracleMismatch(SkewCodecError, AssertionError):
    pass


class NotSeparable(SkewCodecError, ValueError):
    pass


class NotDualContaining(SkewCodecError, ValueError):
    pass


class NegativeLogicalDim(SkewCodecError, ValueError):
    pass


class BoundViolated(SkewCodecError, AssertionError):
    pass


class EmptyCode(SkewCodecError, ValueError):
    """Distance requested for a code with no nonzero word."""


class ParseError(SkewCodecError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
