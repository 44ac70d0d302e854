"""Exception types shared across the package."""


class InvalidElement(IndexError):
    """An element id outside the declared element range."""


class NotComposable(ValueError):
    """Two morphisms whose fibers/objects do not match."""


class GuardExceeded(RuntimeError):
    """A finite enumeration would exceed its configured size limit."""


class NotCategorical(ValueError):
    """Raised by operations that need a graphing of a non-categorical input."""


class GraphingFailed(RuntimeError):
    """The canonical graphing construction violated a graphed-semigroupoid clause."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        super().__init__(f"graphing failed: {first}")


class ProductUndefined(ArithmeticError):
    """An intermediate product that must exist was undefined."""


class PreconditionError(ValueError):
    """An input does not satisfy the precondition of an operation."""


class ContradictionError(AssertionError):
    """A property that always holds for valid input was observed to fail.

    This signals either malformed input that slipped past a precondition or a
    bug in this package.
    """
