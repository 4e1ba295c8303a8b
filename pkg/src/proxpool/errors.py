"""Exception hierarchy shared across the package."""


class ProxPoolError(Exception):
    """Base class for all package-specific errors."""


class IngestionError(ProxPoolError):
    """A dataset file is missing or unreadable."""


class FormatError(ProxPoolError):
    """A dataset file is present but malformed."""


class SplitError(ProxPoolError):
    """A dataset cannot be partitioned as requested."""


class NumericError(ProxPoolError):
    """A computation produced or received non-finite / out-of-domain values."""


class ContractError(ProxPoolError):
    """An internal precondition or invariant was violated by the caller."""


class TrainingError(ProxPoolError):
    """Training aborted (for example on a non-finite loss)."""
