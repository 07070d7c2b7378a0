"""Exception hierarchy.

Errors are grouped by the class of failure so callers (and the command
line front end) can map them onto exit statuses without string matching.
"""


class HomflyError(Exception):
    """Base class for all package errors."""


class ParameterDomainError(HomflyError, ValueError):
    """The (N, k) point or a requested range lies outside the valid domain."""


class DomainTooSmall(ParameterDomainError):
    pass


class DegeneratePhase(ParameterDomainError):
    pass


class InvalidRange(ParameterDomainError):
    pass


class EvaluationError(HomflyError, ArithmeticError):
    """An evaluation or exact reduction could not be completed."""


class NotDivisible(EvaluationError):
    pass


class ResidualRadical(EvaluationError):
    pass


class BasisMismatch(EvaluationError):
    pass


class ReconstructionResidual(EvaluationError):
    pass


class ZeroBase(HomflyError, ZeroDivisionError):
    pass


class NotUnitary(HomflyError, ValueError):
    pass


class AllZeroPower(HomflyError, RuntimeError):
    pass


class WordSyntaxError(HomflyError, ValueError):
    """An operator word string could not be parsed."""
