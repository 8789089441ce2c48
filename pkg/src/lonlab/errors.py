"""Exception types raised by lonlab."""


class LonlabError(Exception):
    """Base class for all lonlab errors."""


class InvalidParametersError(LonlabError, ValueError):
    """Raised for an impossible (n, k) pair or malformed landscape descriptor."""


class CapacityError(LonlabError):
    """Raised when an exhaustive computation is requested above the size cap."""


class DegenerateFitError(LonlabError, ValueError):
    """Raised when a regression has fewer than two points or no x-variance."""
