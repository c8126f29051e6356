"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class HypothesisViolation(DomainError):
    """A stated hypothesis of a congruence theorem fails for these inputs.

    Raised instead of returning a verdict: the underlying result asserts
    nothing when its hypotheses do not hold.
    """

    def __init__(self, clause: str):
        super().__init__(f"hypothesis violated: {clause}")
        self.clause = clause


class ResourceLimitExceeded(RuntimeError):
    """A brute-force computation would exceed its configured bound."""
