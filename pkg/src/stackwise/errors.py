"""Exception hierarchy shared by every module."""


class StackwiseError(Exception):
    """Base class for all library errors."""


class InputError(StackwiseError, ValueError):
    """Malformed or out-of-range input (CLI exit status 2)."""


class PosetFormatError(InputError):
    """A poset document could not be parsed."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class PosetError(InputError):
    """A parsed poset violates a structural requirement (cycle, disconnected, ...)."""


class ECViolation(StackwiseError):
    """A single-term operator was asked for but several same-colored elements qualify."""


class MathematicalFailure(StackwiseError):
    """A checked mathematical claim failed (CLI exit status 1)."""


class LinearDependence(MathematicalFailure):
    """Stackwise vectors are dependent; carries the explicit witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SpanViolation(MathematicalFailure):
    """A vector could not be written in the stackwise basis."""


class IntegralityViolation(MathematicalFailure):
    """A stackwise expansion on a d-complete poset produced a non-integer coefficient."""


class InconsistentMu(MathematicalFailure):
    """The eigenvalue recursion gave two different rows for the same split."""
