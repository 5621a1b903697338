"""Typed errors raised by the library.

Every error carries a stable ``code`` that the command line prints as
``error[<code>]: <message>``. Errors deriving from :class:`MalformedInput`
map to exit status 2, errors deriving from :class:`DomainError` to 3.
"""


class StringyError(Exception):
    code = "StringyError"
    exit_status = 1


class MalformedInput(StringyError):
    code = "MalformedInput"
    exit_status = 2


class MalformedExpression(MalformedInput):
    code = "MalformedExpression"


class InvalidResolutionFile(MalformedInput):
    code = "InvalidResolutionFile"


class InvalidConfig(MalformedInput):
    code = "InvalidConfig"


class DomainError(StringyError):
    code = "DomainError"
    exit_status = 3


class NonExactDivision(DomainError):
    code = "NonExactDivision"


class NotAPowerSeries(DomainError):
    code = "NotAPowerSeries"


class PoleAtOne(DomainError):
    code = "PoleAtOne"


class NonPolynomialPoincareSeries(DomainError):
    code = "NonPolynomialPoincareSeries"


class InvalidExponent(DomainError):
    code = "InvalidExponent"


class NotCanonical(DomainError):
    code = "NotCanonical"


class SignViolation(DomainError):
    code = "SignViolation"


class DependentGenerators(DomainError):
    code = "DependentGenerators"


class InvalidCone(DomainError):
    code = "InvalidCone"


class HigherOrderPole(DomainError):
    code = "HigherOrderPole"


class NonGorensteinUnsupported(DomainError):
    code = "NonGorensteinUnsupported"


class InvalidResolutionData(DomainError):
    code = "InvalidResolutionData"


class DimensionLimitExceeded(DomainError):
    code = "DimensionLimitExceeded"


class InconsistentEulerNumber(DomainError):
    code = "InconsistentEulerNumber"
