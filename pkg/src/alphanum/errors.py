"""Error types shared across the package."""


class AlphanumError(Exception):
    """Base class for domain errors raised by this package."""


class ResourceCapError(AlphanumError):
    """A computation would exceed a configured memory or size cap."""


class DegenerateDenominatorError(AlphanumError):
    """Rounded |n^upper| is zero, so no ratio can be formed."""
