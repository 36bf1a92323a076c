"""Exception types shared across the package."""


class HyperalgError(Exception):
    """Base class for every error raised by hyperalg."""


class StructureError(HyperalgError, ValueError):
    """Malformed carrier, table or subset (bad index, empty cell, wrong shape)."""


class PreconditionError(HyperalgError, ValueError):
    """An operation was called outside its documented precondition.

    ``witness`` carries whatever evidence the caller needs to see why,
    e.g. a dependence witness for a list that was supposed to be independent.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class HypothesisError(PreconditionError):
    """The space lacks a structural hypothesis (strong left distributivity)."""


class TheoremViolation(HyperalgError):
    """A computation contradicted a theorem whose hypotheses were met."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(HyperalgError):
    """Enumeration refused because its estimated cost exceeds the budget."""

    def __init__(self, estimated, budget):
        super().__init__(
            f"estimated search cost {estimated:.3g} exceeds budget {budget:.3g} "
            f"(raise it with HYPERALG_BUDGET)"
        )
        self.estimated = estimated
        self.budget = budget


class AxiomError(HyperalgError):
    """Raised by the ``make_*`` constructors when validation fails."""

    def __init__(self, report):
        first = report.first_failure
        super().__init__(f"axiom check failed: {first}" if first else "axiom check failed")
        self.report = report
