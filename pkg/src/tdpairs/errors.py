"""Exception hierarchy.

Every error raised on purpose by the library derives from ``TDError`` so the
CLI can separate input problems (exit code 2) from genuine bugs.
"""


class TDError(ValueError):
    pass


class FieldMismatch(TDError):
    pass


class InvalidQ(TDError):
    pass


class ParseError(TDError):
    pass


class ValidationError(TDError):
    pass


class NotTridiagonalEigenvalues(ValidationError):
    pass


class DataNotInField(TDError):
    pass


class FitFailure(TDError):
    pass


class NotLeonard(TDError):
    pass


class InvalidPsi(TDError):
    pass


class MissingPsi(TDError):
    pass


class UndefinedSeries(TDError):
    pass


class NotApplicable(TDError):
    pass


class NotSplitConsistent(TDError):
    pass


class NotSharp(TDError):
    pass
