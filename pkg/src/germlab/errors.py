"""Exception hierarchy shared by the whole package.

Exit-code mapping used by the CLI: PreconditionError -> 2,
BudgetExceededError -> 3, CertificationError -> 4.
"""


class GermlabError(Exception):
    """Base class for all package errors."""


class PreconditionError(GermlabError):
    """A mathematical precondition of an operation is violated."""


class RingMismatchError(PreconditionError):
    """Operands live in different rings."""


class ParseError(PreconditionError):
    """Input-language syntax or semantic error, with position info."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class BudgetExceededError(GermlabError):
    """A computation ran past its configured reduction-step budget."""


class CertificationError(GermlabError):
    """Genericity certification failed: per-seed results kept disagreeing."""
