"""Error types shared across the package."""


class InfiniteComplementError(ValueError):
    """Generators with gcd > 1 generate a submonoid with infinite complement."""


class HypothesisError(ValueError):
    """Arguments fall outside the hypotheses of the statement being checked."""


class InvariantViolation(RuntimeError):
    """A proved inequality failed, which points at a bug in this package."""
