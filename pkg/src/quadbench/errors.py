"""Exception hierarchy.

``InputError`` subclasses signal bad user input (the CLI maps them to exit
code 1); everything else deriving from ``WorkbenchError`` is a computation
failure (exit code 2).
"""


class WorkbenchError(Exception):
    pass


class InputError(WorkbenchError, ValueError):
    pass


class NotSquarefree(InputError):
    pass


class DegenerateD(InputError):
    pass


class NotPrime(InputError):
    pass


class NotOddPrime(InputError):
    pass


class EmptyConfig(InputError):
    pass


class ParseError(InputError):
    pass


class FieldMismatch(WorkbenchError, ValueError):
    pass


class DivisionByZero(WorkbenchError, ZeroDivisionError):
    pass


class NotIntegral(WorkbenchError, ValueError):
    pass


class UnitInput(WorkbenchError, ValueError):
    pass


class ImaginaryField(WorkbenchError, ValueError):
    pass


class ZeroIdeal(WorkbenchError, ValueError):
    pass


class TrivialClass(WorkbenchError, ValueError):
    pass


class GeneratorNotFound(WorkbenchError, RuntimeError):
    pass


class ConsistencyError(WorkbenchError, RuntimeError):
    """An internal invariant was violated; always a bug."""
