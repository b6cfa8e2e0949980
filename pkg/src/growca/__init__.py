"""Growing-register keystream generator, XOR cipher, and randomness battery.

The register starts from a short seed and gains one cell per synchronous
update, so arbitrary-length byte streams fall out of a fixed-size key.
`cipher` XORs messages against that stream, `randomness` checks the
stream's statistical quality, and `render` draws the growth triangle.
"""

from .automaton import (
    MIN_SEED_LENGTH,
    CAState,
    Seed,
    diffuse,
    grow_to,
    growth_trace,
    seed_state,
    step,
)
from .cipher import CipherKey, crypt, keystream
from .errors import (
    AllZeroSeedError,
    CompressorFailureError,
    DataTooShortError,
    EmptyDataError,
    EmptySourceError,
    EmptyTraceError,
    GrowCAError,
    NonMonotoneTraceError,
    SeedTooShortError,
    TargetShorterThanStateError,
)
from .fourier import dft_direct, fft
from .randomness import (
    DEFAULT_COMPRESSOR,
    MIN_COMPRESSION_RATIO,
    MIN_ENTROPY,
    MIN_P_VALUE,
    PHASE_BINS,
    ByteHistogram,
    Compressor,
    RandomnessReport,
    SpectrumAnalysis,
    byte_histogram,
    compression_ratio,
    entropy,
    full_report,
    get_compressor,
    half_spectrum,
    histogram_uniformity_test,
    phase_uniform_test,
    rayleigh_test,
)
from .render import GrowthImage, render_growth, write_pgm

__version__ = "0.1.0"

__all__ = [
    "AllZeroSeedError",
    "ByteHistogram",
    "CAState",
    "CipherKey",
    "Compressor",
    "CompressorFailureError",
    "DEFAULT_COMPRESSOR",
    "DataTooShortError",
    "EmptyDataError",
    "EmptySourceError",
    "EmptyTraceError",
    "GrowCAError",
    "GrowthImage",
    "MIN_COMPRESSION_RATIO",
    "MIN_ENTROPY",
    "MIN_P_VALUE",
    "MIN_SEED_LENGTH",
    "NonMonotoneTraceError",
    "PHASE_BINS",
    "RandomnessReport",
    "Seed",
    "SeedTooShortError",
    "SpectrumAnalysis",
    "TargetShorterThanStateError",
    "byte_histogram",
    "compression_ratio",
    "crypt",
    "dft_direct",
    "diffuse",
    "entropy",
    "fft",
    "full_report",
    "get_compressor",
    "grow_to",
    "growth_trace",
    "half_spectrum",
    "histogram_uniformity_test",
    "keystream",
    "phase_uniform_test",
    "rayleigh_test",
    "render_growth",
    "seed_state",
    "step",
    "write_pgm",
]
