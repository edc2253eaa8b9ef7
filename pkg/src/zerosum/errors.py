"""Exception types raised across the package."""


class ZeroSumError(Exception):
    """Base class for all package errors."""


class DegreeOutOfRange(ZeroSumError, ValueError):
    pass


class SpecMismatch(ZeroSumError, ValueError):
    pass


class NotADivisor(ZeroSumError, ValueError):
    pass


class DimensionMismatch(ZeroSumError, ValueError):
    pass


class BudgetExceeded(ZeroSumError, RuntimeError):
    pass


class EmptyTuple(ZeroSumError, ValueError):
    pass


class IndexOutOfRange(ZeroSumError, IndexError):
    pass


class DependentBasis(ZeroSumError, ValueError):
    """Raised when a tuple that must be F2-independent is not."""


class ZeroDimension(ZeroSumError, ValueError):
    pass


class DivisionByZeroPoly(ZeroSumError, ZeroDivisionError):
    pass


class ZeroPoly(ZeroSumError, ValueError):
    pass


class DegreeCapExceeded(ZeroSumError, ValueError):
    pass


class TooManyGenerators(ZeroSumError, ValueError):
    pass


class PreconditionViolated(ZeroSumError, ValueError):
    pass


class NoSolution(ZeroSumError):
    """A bounded search ran out of budget without finding a witness."""


class NotExist(ZeroSumError):
    """The requested object provably does not exist."""


class CapExceeded(ZeroSumError, ValueError):
    pass


# aliases used by a few operations
DependentPrefix = DependentBasis
DependentInput = DependentBasis
BothZero = ZeroPoly
ScanBudgetExceeded = BudgetExceeded
