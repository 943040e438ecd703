# -*- coding: utf-8 -*-

"""Exceptions raised by the twisted cohomology engine.

Every exception carries a named ``code`` used in the JSON error document and
the ``exit_status`` the command-line tool returns for it: 2 for problems with
the input (parsing, validation) and 1 for mathematical preconditions that do
not hold.
"""


class TwistedCohomologyError(Exception):
    """Base class for all errors raised by the package."""

    code = "TwistedCohomologyError"
    exit_status = 1

    def to_dict(self):
        """The error as a dictionary for the JSON report."""
        return {"code": self.code, "message": str(self)}


class ParseError(TwistedCohomologyError, ValueError):
    """A syntax error in a polynomial or form expression.

    Parameters
    ----------
    message : str
        What went wrong.
    offset : int
        The byte offset in the text where the problem was found.
    text : str
        The text being parsed, echoed in the message.
    """

    code = "ParseError"
    exit_status = 2

    def __init__(self, message, offset=0, text=None):
        self.offset = offset
        self.text = text
        if text is not None:
            message = f"{message} at byte {offset}: '{text}'"
        else:
            message = f"{message} at byte {offset}"
        super().__init__(message)

    def to_dict(self):
        result = super().to_dict()
        result["offset"] = self.offset
        return result


class UnknownVariableError(ParseError):
    code = "UnknownVariable"


class ExponentOverflowError(ParseError):
    code = "ExponentOverflow"


class ArityError(TwistedCohomologyError, ValueError):
    """Values with different numbers of variables were combined."""

    code = "ArityMismatch"
    exit_status = 2


class ProblemValidationError(TwistedCohomologyError, ValueError):
    code = "InvalidProblem"
    exit_status = 2


class NotQuasiHomogeneousError(TwistedCohomologyError, ValueError):
    code = "NotQuasiHomogeneous"


class NotIsolatedSingularityError(TwistedCohomologyError, ValueError):
    code = "NotIsolatedSingularity"


class PreconditionError(TwistedCohomologyError, ValueError):
    code = "PreconditionViolated"


class PairIdentityError(PreconditionError):
    """g∘φ = a·f does not hold for a morphism of pairs."""

    code = "PairIdentityViolated"


class SolverInconsistencyError(TwistedCohomologyError, RuntimeError):
    """An exact linear system that must be solvable was not.

    This always indicates a bug: the underlying theorem guarantees a unique
    solution.
    """

    code = "SolverInconsistency"
