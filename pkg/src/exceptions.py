"""Exception hierarchy for objlin."""


class ObjlinError(ValueError):
    """Base class for all engine errors."""


class GroupoidError(ObjlinError):
    """A groupoid or parity structure violates one of its axioms."""


class SpanError(ObjlinError):
    """A P-span violates the functor laws or the rho-naturality square."""


class FootMismatchError(SpanError):
    """Two spans (or states) were combined along feet that differ."""


class NonOrientableError(ObjlinError):
    """An operation needed an orientable object but got one with an odd automorphism."""


class InvalidActionError(ObjlinError):
    """A group action fails the action laws or its 2-cell compatibility."""


class BudgetExceededError(ObjlinError):
    """An exterior power enumeration would exceed the morphism budget."""

    def __init__(self, candidates: int, budget: int):
        """Initialize budget error.

        Args:
            candidates: Number of morphism candidates the enumeration needs
            budget: Configured budget
        """
        super().__init__(
            f"exterior power needs {candidates} morphism candidates, budget is {budget}"
        )
        self.candidates = candidates
        self.budget = budget


class DocumentError(ObjlinError):
    """A document could not be parsed or failed semantic validation."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        """Initialize document error.

        Args:
            message: Description of the problem
            line: 1-based line of a syntax error, if known
            column: 1-based column of a syntax error, if known
        """
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class ConsistencyError(ObjlinError):
    """Two computations that must agree did not (internal invariant broken)."""
