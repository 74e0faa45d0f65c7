"""Exception hierarchy. Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class LexirankError(Exception):
    exit_code = 4


class ParseError(LexirankError, ValueError):
    """Malformed text input.

    ``position`` is a 0-based character offset for expression text,
    ``line`` a 1-based line number for CSV input. Either may be None.
    """

    exit_code = 1

    def __init__(self, message: str, *, position: int | None = None, line: int | None = None):
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class UnknownSymbol(ParseError):
    pass


class HeightUnsupported(LexirankError):
    exit_code = 2


class TransferUnavailable(LexirankError):
    exit_code = 3


class DomainError(LexirankError, ValueError):
    exit_code = 4


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class PowerUndefined(DomainError):
    pass


class RationalPowerUnavailable(DomainError):
    pass


class NotDyadicRank(DomainError):
    pass
