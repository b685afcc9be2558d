"""Exception types raised across the package."""


class CogrowthError(Exception):
    """Base class for all errors raised by this package."""


class NonProlongable(CogrowthError):
    pass


class EmptyPeriod(CogrowthError):
    pass


class PrefixTooShort(CogrowthError):
    pass


class OutOfRange(CogrowthError):
    pass


class InsufficientStrata(CogrowthError):
    pass


class TooLarge(CogrowthError):
    pass


class EmptyGraph(CogrowthError):
    pass


class NotAFork(CogrowthError):
    pass


class NotGood(CogrowthError):
    pass


class PreconditionFailed(CogrowthError):
    pass


class GenerationFailed(CogrowthError):
    pass


class BudgetExceeded(CogrowthError):
    """Raised when an iterated line digraph would exceed the size budget."""

    def __init__(self, estimate, budget):
        super().__init__(f"line digraph needs {estimate} vertices, budget is {budget}")
        self.estimate = estimate
        self.budget = budget


class SaturationFailed(UserWarning):
    """Factor strata did not stabilize before the prefix length cap.

    Issued as a warning: the (uncertified) language is still returned.
    """


class UncertifiedInput(UserWarning):
    pass
