"""Exception hierarchy shared by every module of the package."""


class CyclocodeError(Exception):
    """Base class; the CLI maps any subclass to exit status 2."""


class NotPrime(CyclocodeError, ValueError):
    pass


class NotPrimePower(CyclocodeError, ValueError):
    pass


class TableBudgetExceeded(CyclocodeError):
    pass


class ReducibleModulus(CyclocodeError, ValueError):
    pass


class NonPrimitiveModulus(CyclocodeError, ValueError):
    pass


class DivisionByZero(CyclocodeError, ZeroDivisionError):
    pass


class CoefficientOutsideSubfield(CyclocodeError, ArithmeticError):
    """A minimal polynomial expanded to a coefficient outside F_q (field-core bug)."""


class OrderDoesNotDivide(CyclocodeError, ValueError):
    pass


class HypothesisViolated(CyclocodeError, ValueError):
    pass


class OddDegree(CyclocodeError, ValueError):
    pass


class ConditionsNotMet(CyclocodeError, ValueError):
    pass


class AssumptionViolated(CyclocodeError, ValueError):
    pass


class EnumerationBudgetExceeded(CyclocodeError):
    pass


class InternalConsistencyError(CyclocodeError, ArithmeticError):
    """An integer division that the theory guarantees to be exact was not."""
