"""
Exception hierarchy shared by every module.

Every error raised on purpose by the library derives from IfcError, so the CLI
and the HTTP layer can translate them without catching unrelated failures.
"""


class IfcError(Exception):
    """Base class for all domain errors."""


class NotInvertible(IfcError):
    def __init__(self, a: int, m: int):
        self.a, self.m = a, m
        super().__init__(f"{a} has no inverse modulo {m}")


class NotCoprime(IfcError):
    pass


class NotPrime(IfcError):
    pass


class NotInImage(IfcError):
    pass


class NotDecodable(IfcError):
    pass


class CapacityExceeded(IfcError):
    pass


class IsolatedRow(IfcError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row + 1} has no interfering entries")


class NotDivisible(IfcError):
    pass


class NonIntegerResult(IfcError):
    def __init__(self, row: int, col: int):
        self.row, self.col = row, col
        super().__init__(f"entry ({row + 1}, {col + 1}) is not an integer")


class EmptySearch(IfcError):
    pass


class BinTooSmall(IfcError):
    pass


class NonIntegralAfterScaling(IfcError):
    pass


class DigitOutOfRange(IfcError):
    pass


class NotLatticePoint(IfcError):
    pass


class InfeasibleDepth(IfcError):
    pass


class ParseError(IfcError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {message}")


class CertificateMismatch(IfcError):
    pass


class BoundViolation(IfcError):
    pass
