"""Exception hierarchy."""


class ExtropyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ExtropyError, ValueError):
    """A parameter lies outside the domain of the formula."""


class ValidationError(ExtropyError, ValueError):
    """Input data fails a structural check (length, finiteness, sign)."""


class DegenerateSampleError(ValidationError):
    """A spacing used by an estimator is zero, so the statistic is infinite.

    Attributes
    ----------
    index : int
        1-based order-statistic index whose window has zero width.
    m : int
        The window size that was in use.
    """

    def __init__(self, index: int, m: int):
        self.index = index
        self.m = m
        super().__init__(
            f"zero spacing X[{index}+{m}] - X[{index}-{m}] at order statistic {index} "
            f"(window m={m}); tied values span the whole window, try a larger m"
        )


class QuadratureError(ExtropyError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested accuracy."""


class SimulationError(ExtropyError, RuntimeError):
    """A Monte Carlo run produced too many unusable replications."""


class IngestionError(ExtropyError, ValueError):
    """A data file could not be parsed into a valid dataset."""
