"""Exception hierarchy shared by every module of the package."""


class CodeError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionMismatch(CodeError):
    pass


class LengthMismatch(DimensionMismatch):
    pass


class SingularMatrix(CodeError, ArithmeticError):
    pass


class UnsupportedDegree(CodeError):
    pass


class ContextMismatch(CodeError):
    pass


class EvenLength(CodeError):
    """Cyclotomic structure over GF(2) needs an odd length."""


class CoefficientNotBinary(CodeError, ArithmeticError):
    """A minimal polynomial had a coefficient outside GF(2); this is an arithmetic bug."""


class DualConditionViolated(CodeError):
    pass


class NotASubcode(CodeError):
    pass


class DimensionOrder(CodeError):
    pass


class SizeTooSmall(CodeError):
    pass


class InsufficientEnlargement(CodeError):
    """Raised when the outer code adds fewer than two dimensions."""


class NotApplicable(CodeError):
    pass


class DomainError(CodeError):
    pass


class LemmaViolation(CodeError, AssertionError):
    pass


class FormatError(CodeError):
    """Malformed code file or Pauli string."""
