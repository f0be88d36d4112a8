"""Exception hierarchy.  The CLI maps these onto its exit codes."""


class MatroidError(ValueError):
    """Base class for invalid matroid input or misuse of an operation."""


class AxiomError(MatroidError):
    """A proposed family of flats violates one of the flat axioms."""

    def __init__(self, axiom: str, message: str, witnesses=()):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.witnesses = tuple(witnesses)


class SizeCapError(MatroidError):
    """Ground set larger than the configured cap."""


class InvalidElementError(MatroidError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class NotAFlatError(MatroidError):
    pass


class ColoopError(MatroidError):
    """The deletion formula was asked to delete a coloop."""


class FormulaRangeError(MatroidError):
    """A closed form was evaluated outside the range where it holds.

    ``engine`` and ``formula`` carry the two disagreeing values when a
    counterexample is known.
    """

    def __init__(self, message: str, engine=None, formula=None):
        super().__init__(message)
        self.engine = engine
        self.formula = formula
