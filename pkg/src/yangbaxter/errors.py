"""Exception types.

Every exception carries a ``details`` mapping so the command line can turn
it into a JSON error object without knowing the concrete type.
"""


class YBEError(Exception):
    kind = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self):
        out = {"error": self.kind, "message": str(self)}
        out.update(self.details)
        return out


# input tables

class TableShapeError(YBEError, ValueError):
    kind = "TableShapeError"


class NonDegeneracyFailure(YBEError, ValueError):
    kind = "NonDegeneracyFailure"


class RNotBijective(YBEError, ValueError):
    kind = "RNotBijective"


class YbeConditionFailure(YBEError, ValueError):
    kind = "YbeConditionFailure"


class NonCommuting(YBEError, ValueError):
    kind = "NonCommuting"


# search budgets

class ClosureCapExceeded(YBEError):
    kind = "ClosureCapExceeded"


class ClassOverflow(YBEError):
    kind = "ClassOverflow"


class StateCapExceeded(YBEError):
    kind = "StateCapExceeded"


class NoValidD(YBEError):
    kind = "NoValidD"


class BudgetExceeded(YBEError):
    kind = "BudgetExceeded"


class EnumerationTooLarge(YBEError, ValueError):
    kind = "EnumerationTooLarge"


class LetterOutsideIntersection(YBEError, ValueError):
    kind = "LetterOutsideIntersection"


# racks

class NotARack(YBEError, ValueError):
    kind = "NotARack"


class NotRackType(YBEError, ValueError):
    kind = "NotRackType"


class InvalidPartition(YBEError, ValueError):
    kind = "InvalidPartition"


class ConditionFailure(YBEError, ValueError):
    kind = "ConditionFailure"


# braces

class NotAGroup(YBEError, ValueError):
    kind = "NotAGroup"


class NeutralMismatch(YBEError, ValueError):
    kind = "NeutralMismatch"


class CompatibilityFailure(YBEError, ValueError):
    kind = "CompatibilityFailure"


class InvalidAction(YBEError, ValueError):
    kind = "InvalidAction"


class NotAnIdeal(YBEError, ValueError):
    kind = "NotAnIdeal"


# documents

class ParseError(YBEError, ValueError):
    kind = "ParseError"


class SchemaError(YBEError, ValueError):
    kind = "SchemaError"


class KindUnknown(YBEError, ValueError):
    kind = "KindUnknown"
