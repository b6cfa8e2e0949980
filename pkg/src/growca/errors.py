"""Exception types raised across the package."""


class GrowCAError(ValueError):
    """Base class for all validation errors raised by growca."""


class SeedTooShortError(GrowCAError):
    """Seed or key material shorter than the 9-byte minimum."""


class AllZeroSeedError(GrowCAError):
    """Seed or key material consisting only of zero bytes."""


class TargetShorterThanStateError(GrowCAError):
    """Requested target length is below the current register length."""


class EmptySourceError(GrowCAError):
    """Zero-length input handed to the cipher."""


class EmptyDataError(GrowCAError):
    """Zero-length input handed to an analysis routine."""


class DataTooShortError(GrowCAError):
    """Input too short for the requested analysis to be meaningful."""


class CompressorFailureError(GrowCAError):
    """The injected compressor raised while compressing."""


class EmptyTraceError(GrowCAError):
    """Growth trace with no snapshots."""


class NonMonotoneTraceError(GrowCAError):
    """Growth trace whose register lengths do not increase by one per snapshot."""
