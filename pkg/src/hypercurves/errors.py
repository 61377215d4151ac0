"""Exception hierarchy shared by all modules."""

from __future__ import annotations

import enum


class HyperCurvesError(Exception):
    """Base class for every error raised by this package."""


# finite fields and characters
class NotPrime(HyperCurvesError, ValueError):
    pass


class EvenPrime(HyperCurvesError, ValueError):
    pass


class FieldMismatch(HyperCurvesError, ValueError):
    pass


class NotASquare(HyperCurvesError, ValueError):
    pass


# curves
class ReductionFailure(str, enum.Enum):
    DENOMINATOR_DIVIDES_P = "DenominatorDividesP"
    LAMBDA_IS_ZERO = "LambdaIsZero"
    LAMBDA_IS_ONE = "LambdaIsOne"
    P_DIVIDES_L = "PDividesL"


class BadReduction(HyperCurvesError, ValueError):
    def __init__(self, reason: ReductionFailure, msg: str = ""):
        self.reason = reason
        super().__init__(msg or reason.value)


class CongruenceViolated(HyperCurvesError, ValueError):
    pass


class RoundingFailure(HyperCurvesError, ArithmeticError):
    pass


class MissingCharacter(HyperCurvesError, RuntimeError):
    pass


class NoRepresentation(HyperCurvesError, RuntimeError):
    pass


# real special functions
class PoleError(HyperCurvesError, ValueError):
    pass


class ParameterPole(PoleError):
    pass


class Indeterminate(HyperCurvesError, ValueError):
    pass


class NoConvergence(HyperCurvesError, ArithmeticError):
    pass


class DomainError(HyperCurvesError, ValueError):
    pass


# orchestration
class InvalidConfig(HyperCurvesError, ValueError):
    pass
