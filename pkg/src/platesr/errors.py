"""Error types shared across the pipeline."""


class InvalidSpecError(ValueError):
    """A plate spec violates its invariants (bad class id, tilt, sigma...)."""


class ShapeError(ValueError):
    """Array dimensions violate an operation's contract."""


class ManifestError(ValueError):
    """A dataset manifest line is malformed or inconsistent."""


class DomainError(ValueError):
    """A numeric input lies outside the function's domain."""


class ConfigError(ValueError):
    """A configuration value is invalid."""


class NumericError(RuntimeError):
    """Non-finite values encountered where finite ones are required."""


class AssignmentError(RuntimeError):
    """Ground-truth boxes exceed the target grid's assignment capacity."""
