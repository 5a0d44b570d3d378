"""Exception hierarchy.

The CLI maps these onto exit codes: ``ValidationError`` subclasses exit
with 1, ``BudgetExceeded`` with 2.
"""


class AQLError(Exception):
    pass


class ValidationError(AQLError):
    pass


class LoopArrow(ValidationError):
    pass


class DanglingEndpoint(ValidationError):
    pass


class DuplicateId(ValidationError):
    pass


class IndexMismatch(ValidationError):
    pass


class NotAffine(ValidationError):
    pass


class OrientedCycle(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class FieldMismatch(ValidationError):
    pass


class MixedQuiver(ValidationError):
    pass


class InsufficientPrimes(ValidationError):
    pass


class NonzeroTotalPairing(ValidationError):
    pass


class UnknownCommand(ValidationError):
    pass


class CutoffExceeded(AQLError):
    pass


class BudgetExceeded(AQLError):
    pass


class CacheCorrupt(AQLError):
    pass
