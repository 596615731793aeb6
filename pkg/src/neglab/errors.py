"""Exception hierarchy shared by all neglab modules."""


class NeglabError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(NeglabError):
    """Invalid input or violated precondition (CLI exit code 1)."""


class ArityMismatchError(ValidationError):
    """Two functions (or a function and a restriction) disagree on arity."""


class ParseError(ValidationError):
    """Malformed truth-table or decomposition file."""


class BudgetExceededError(ValidationError):
    """An oracle was asked for more draws/queries than its budget allows."""


class InternalError(NeglabError):
    """A self-check failed while producing output (CLI exit code 2)."""
