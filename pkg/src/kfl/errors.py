"""Exception hierarchy shared by every module.

Each error carries a stable ``code`` string used by the CLI's structured error
object. Errors flagged ``internal`` indicate a broken invariant rather than a
bad input; the CLI maps them to exit status 1 instead of 2.
"""


class KflError(Exception):
    code = "KFL_ERROR"
    internal = False

    def __init__(self, message="", **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        return {"error_code": self.code, "message": self.message}


class BadArgument(KflError, ValueError):
    code = "BAD_ARGUMENT"


class DivisionByZero(KflError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO"


class RadicandMismatch(KflError, ValueError):
    code = "RADICAND_MISMATCH"


class BadIndex(KflError, IndexError):
    code = "BAD_INDEX"


class ZeroK(KflError, ValueError):
    code = "ZERO_K"


class BadP(KflError, ValueError):
    code = "BAD_P"


class ZeroPolynomial(KflError, ValueError):
    code = "ZERO_POLYNOMIAL"


class ExceptionalK(KflError, ValueError):
    code = "EXCEPTIONAL_K"


class BadSlope(KflError, ValueError):
    code = "BAD_SLOPE"


class BadShape(KflError, ValueError):
    code = "BAD_SHAPE"


class NotFactorable(KflError, ValueError):
    code = "NOT_FACTORABLE"


class NonIntegerTerm(KflError, ValueError):
    code = "NON_INTEGER_TERM"


class InternalInconsistency(KflError, AssertionError):
    code = "INTERNAL_INCONSISTENCY"
    internal = True


class ConstructionFailure(InternalInconsistency):
    """The large-Zsigmondy-set construction missed its guaranteed count."""

    code = "CONSTRUCTION_FAILURE"

    def __init__(self, message="", report=None):
        super().__init__(message)
        self.report = report
