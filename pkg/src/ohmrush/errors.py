"""Exception hierarchy.

Every error carries a stable ``code`` used in machine-readable reports.
"""


class OhmRushError(Exception):
    code = "Error"

    def to_dict(self):
        return {"type": self.code, "message": str(self)}


class DivisionByZero(OhmRushError, ZeroDivisionError):
    code = "DivisionByZero"


class NonUnitDivisor(OhmRushError, ArithmeticError):
    code = "NonUnitDivisor"


class DomainMismatch(OhmRushError, TypeError):
    code = "DomainMismatch"


class UnsupportedCoefficients(OhmRushError):
    code = "UnsupportedCoefficients"


class DMBoundExceeded(OhmRushError):
    code = "DMBoundExceeded"

    def __init__(self, bound):
        super().__init__(f"no exponent n <= {bound} satisfies the Dedekind-Mertens identity")
        self.bound = bound


class UnsupportedLocalization(OhmRushError):
    code = "UnsupportedLocalization"


class NotAWitness(OhmRushError):
    code = "NotAWitness"


class ZeroDenominator(OhmRushError, ZeroDivisionError):
    code = "ZeroDenominator"


class PrecisionExhausted(OhmRushError):
    code = "PrecisionExhausted"


class NotAUnit(OhmRushError):
    code = "NotAUnit"


class TrivialValuation(OhmRushError):
    code = "TrivialValuation"


class NotContentExtension(OhmRushError):
    code = "NotContentExtension"


class NoWitnessConstructed(OhmRushError):
    code = "NoWitnessConstructed"


class IndexOutOfRange(OhmRushError, IndexError):
    code = "IndexOutOfRange"


class BranchNotContent(OhmRushError):
    code = "BranchNotContent"


class NegativeValueComponent(OhmRushError, ValueError):
    code = "NegativeValueComponent"


class UnknownExampleName(OhmRushError, KeyError):
    code = "UnknownExampleName"

    def __str__(self):
        return Exception.__str__(self)


class ParseError(OhmRushError, ValueError):
    """Input text or scenario that fails to parse.

    ``position`` is a character offset into a single-line input; ``line`` and
    ``column`` (1-based) locate the problem inside a scenario file.
    """

    code = "ParseError"

    def __init__(self, message, position=None, line=None, column=None, path=None):
        super().__init__(message)
        self.position = position
        self.line = line
        self.column = column
        self.path = path

    def __str__(self):
        msg = self.args[0]
        where = []
        if self.path:
            where.append("at " + "/".join(str(p) for p in self.path))
        if self.line is not None:
            where.append(f"line {self.line}, column {self.column}")
        if self.position is not None:
            where.append(f"offset {self.position}")
        return f"{msg} ({'; '.join(where)})" if where else msg

    def to_dict(self):
        out = {"type": self.code, "message": self.args[0]}
        for name in ("position", "line", "column"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        if self.path:
            out["path"] = [str(p) for p in self.path]
        return out
