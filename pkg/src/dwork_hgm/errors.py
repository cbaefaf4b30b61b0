"""Exception hierarchy shared by every module of the package."""


class DworkError(Exception):
    """Base class for all errors raised by dwork_hgm."""


class ZeroDenominator(DworkError, ZeroDivisionError):
    pass


class DivisionByZero(DworkError, ZeroDivisionError):
    pass


class DimensionMismatch(DworkError, ValueError):
    pass


class SingularMatrix(DworkError, ArithmeticError):
    pass


class NonConstantEntries(DworkError, ValueError):
    pass


class NonRationalSpectrum(DworkError, ArithmeticError):
    """A polynomial keeps an irreducible factor of positive degree after
    all rational roots have been deflated."""


class DivergentAtInfinity(DworkError, ArithmeticError):
    pass


class PoleAtPoint(DworkError, ZeroDivisionError):
    pass


class InvalidMonomial(DworkError, ValueError):
    pass


class NotBasisMonomial(DworkError, ValueError):
    pass


class ReductionOverflow(DworkError, RuntimeError):
    """Internal reduction invariant violated; indicates a bug, not bad input."""


class CyclicVectorFailure(DworkError, ArithmeticError):
    pass


class NotCompanionForm(DworkError, ValueError):
    pass


class StillSingular(DworkError, ArithmeticError):
    pass


class NotPowerCompatible(DworkError, ValueError):
    pass


class HigherOrderPole(DworkError, ArithmeticError):
    pass


class MissingUnitBeta(DworkError, ArithmeticError):
    pass


class AmbiguousUnitBeta(DworkError, ArithmeticError):
    pass


class ZeroDenominatorInRecurrence(DworkError, ZeroDivisionError):
    pass


class ParseError(DworkError, ValueError):
    pass
