"""Statistical randomness battery for byte sequences.

Three ways of asking "does this look like noise": base-256 Shannon
entropy, spectral analysis (amplitudes of the mean-removed DFT should be
Rayleigh-distributed and phases uniform), and incompressibility under a
general-purpose compressor. A 256-bin histogram uniformity test rounds
out the battery, and `full_report` folds everything into one verdict.

None of this certifies cryptographic strength; it only rejects data with
obvious structure.
"""

from __future__ import annotations

import bz2
import lzma
import zlib
from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np
from scipy import special, stats

from .errors import (
    CompressorFailureError,
    DataTooShortError,
    EmptyDataError,
    GrowCAError,
)
from .fourier import fft

MIN_ENTROPY = 0.995
MIN_COMPRESSION_RATIO = 0.99
MIN_P_VALUE = 0.001
PHASE_BINS = 64

_MIN_SPECTRUM_INPUT = 16
_MIN_COMPRESSION_INPUT = 1024
_MIN_REPORT_INPUT = 4096


@dataclass(frozen=True)
class ByteHistogram:
    """Occurrence counts for each of the 256 byte values."""

    counts: tuple[int, ...]
    total: int

    def frequencies(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=np.float64) / self.total


@dataclass(frozen=True)
class SpectrumAnalysis:
    """Lower half of the DFT of a mean-removed byte sequence.

    `amplitudes` and `phases` cover coefficient indices 0..half_length-1;
    `sigma_hat` is the maximum-likelihood Rayleigh scale fitted to the
    amplitudes.
    """

    amplitudes: np.ndarray
    phases: np.ndarray
    sigma_hat: float
    half_length: int


@dataclass(frozen=True)
class RandomnessReport:
    """All battery results plus the combined pass/fail verdict."""

    entropy: float
    compression_ratio: float
    compressor_id: str
    histogram_chi2: float
    histogram_p: float
    rayleigh_ks: float
    rayleigh_p: float
    phase_chi2: float
    phase_p: float
    passed: bool


@dataclass(frozen=True)
class Compressor:
    """Pluggable lossless compressor.

    `compress` must be total and deterministic for a given identifier;
    the identifier is recorded verbatim in reports.
    """

    id: str
    compress: Callable[[bytes], bytes]


def get_compressor(name: str) -> Compressor:
    """Look up a compressor by identifier, e.g. "bzip2-9" or "zlib-6".

    Supported families: bzip2 (levels 1-9), zlib (0-9), lzma (presets 0-9).
    """
    family, sep, level_text = name.rpartition("-")
    if not sep or not level_text.isdigit():
        raise GrowCAError(
            f"compressor identifier {name!r} is not of the form family-level"
        )
    level = int(level_text)
    if family == "bzip2" and 1 <= level <= 9:
        fn = partial(bz2.compress, compresslevel=level)
    elif family == "zlib" and 0 <= level <= 9:
        fn = partial(zlib.compress, level=level)
    elif family == "lzma" and 0 <= level <= 9:
        fn = partial(lzma.compress, preset=level)
    else:
        raise GrowCAError(f"unknown compressor {name!r}")
    return Compressor(id=f"{family}-{level}", compress=fn)


DEFAULT_COMPRESSOR = get_compressor("bzip2-9")


def entropy(data) -> float:
    """Base-256 Shannon entropy, in [0, 1].

    1.0 means all 256 byte values are equally frequent; byte values that
    never occur contribute nothing.
    """
    buf = bytes(data)
    if not buf:
        raise EmptyDataError("entropy of empty data is undefined")
    counts = np.bincount(np.frombuffer(buf, dtype=np.uint8), minlength=256)
    p = counts[counts > 0] / len(buf)
    value = float(-np.sum(p * np.log(p)) / np.log(256.0))
    # reassociation noise must not push the value past the documented bounds
    return min(1.0, max(0.0, value))


def byte_histogram(data) -> ByteHistogram:
    """Count occurrences of each byte value."""
    buf = bytes(data)
    if not buf:
        raise EmptyDataError("cannot build a histogram of empty data")
    counts = np.bincount(np.frombuffer(buf, dtype=np.uint8), minlength=256)
    return ByteHistogram(counts=tuple(int(c) for c in counts), total=len(buf))


def histogram_uniformity_test(histogram: ByteHistogram) -> tuple[float, float]:
    """Chi-square test of the byte counts against the uniform law.

    Returns (statistic, p-value); 255 degrees of freedom.
    """
    result = stats.chisquare(np.asarray(histogram.counts, dtype=np.float64))
    return float(result.statistic), float(result.pvalue)


def half_spectrum(data) -> SpectrumAnalysis:
    """DFT of the mean-removed sequence, truncated to indices below L/2.

    The input mean is subtracted first (so the index-0 coefficient is
    ~0), and only the lower half of the spectrum is kept: for real input
    the upper half is the conjugate mirror and carries no extra
    information. Phases are principal values in (-pi, pi].
    """
    buf = bytes(data)
    if len(buf) < _MIN_SPECTRUM_INPUT:
        raise DataTooShortError(
            f"spectral analysis needs at least {_MIN_SPECTRUM_INPUT} bytes, got {len(buf)}"
        )
    x = np.frombuffer(buf, dtype=np.uint8).astype(np.float64)
    coeffs = fft(x - x.mean())[: len(buf) // 2]
    amplitudes = np.abs(coeffs)
    phases = np.angle(coeffs)
    # arctan2 can land on -pi exactly (negative real, signed-zero imaginary);
    # fold that onto +pi so phases stay in the half-open interval.
    phases[phases <= -np.pi] = np.pi
    half = len(coeffs)
    sigma_hat = float(np.sqrt(np.sum(amplitudes * amplitudes) / (2.0 * half)))
    return SpectrumAnalysis(
        amplitudes=amplitudes,
        phases=phases,
        sigma_hat=sigma_hat,
        half_length=half,
    )


def rayleigh_test(spectrum: SpectrumAnalysis) -> tuple[float, float]:
    """One-sample KS test of the amplitudes against Rayleigh(sigma_hat).

    The index-0 amplitude is excluded: mean removal pins it at ~0 and it
    would otherwise poison the fit. Returns (KS statistic, p-value); the
    p-value uses the asymptotic Kolmogorov distribution, adequate at the
    sample sizes this package works with.
    """
    if spectrum.half_length < _MIN_SPECTRUM_INPUT:
        raise DataTooShortError(
            f"Rayleigh test needs at least {_MIN_SPECTRUM_INPUT} spectral lines,"
            f" got {spectrum.half_length}"
        )
    amps = np.sort(np.asarray(spectrum.amplitudes, dtype=np.float64)[1:])
    n = len(amps)
    sigma = spectrum.sigma_hat
    if sigma <= 0.0:
        # No spectral content at all (constant input); nothing to fit.
        return 1.0, 0.0
    cdf = 1.0 - np.exp(-(amps * amps) / (2.0 * sigma * sigma))
    steps = np.arange(1, n + 1) / n
    d_plus = float(np.max(steps - cdf))
    d_minus = float(np.max(cdf - (steps - 1.0 / n)))
    ks = max(d_plus, d_minus)
    p = float(special.kolmogorov(np.sqrt(n) * ks))
    return ks, p


def phase_uniform_test(spectrum: SpectrumAnalysis) -> tuple[float, float]:
    """Chi-square test of the phases over 64 equal bins spanning (-pi, pi].

    The index-0 phase is excluded for the same reason as in
    `rayleigh_test`. Returns (statistic, p-value); 63 degrees of freedom.
    """
    if spectrum.half_length < PHASE_BINS:
        raise DataTooShortError(
            f"phase test needs at least {PHASE_BINS} spectral lines,"
            f" got {spectrum.half_length}"
        )
    phases = np.asarray(spectrum.phases, dtype=np.float64)[1:]
    width = 2.0 * np.pi / PHASE_BINS
    # bin k covers (-pi + k*width, -pi + (k+1)*width]
    idx = np.ceil((phases + np.pi) / width).astype(np.intp) - 1
    idx = np.clip(idx, 0, PHASE_BINS - 1)
    counts = np.bincount(idx, minlength=PHASE_BINS)
    result = stats.chisquare(counts)
    return float(result.statistic), float(result.pvalue)


def compression_ratio(data, compressor: Compressor = DEFAULT_COMPRESSOR) -> float:
    """compressed length / original length under the given compressor.

    Ratios at or above 1.0 mean the data defeated the compressor, the
    behaviour expected of noise. Tiny inputs are header-dominated, hence
    the 1024-byte floor.
    """
    buf = bytes(data)
    if len(buf) < _MIN_COMPRESSION_INPUT:
        raise DataTooShortError(
            f"compression ratio needs at least {_MIN_COMPRESSION_INPUT} bytes,"
            f" got {len(buf)}"
        )
    try:
        packed = compressor.compress(buf)
    except Exception as exc:
        raise CompressorFailureError(
            f"compressor {compressor.id!r} failed: {exc}"
        ) from exc
    return len(packed) / len(buf)


def full_report(data, compressor: Compressor = DEFAULT_COMPRESSOR) -> RandomnessReport:
    """Run the whole battery on `data` and combine the verdicts.

    passed is true iff entropy >= 0.995, compression ratio >= 0.99, and
    the histogram, Rayleigh, and phase p-values all exceed 0.001.
    """
    buf = bytes(data)
    if len(buf) < _MIN_REPORT_INPUT:
        raise DataTooShortError(
            f"full report needs at least {_MIN_REPORT_INPUT} bytes, got {len(buf)}"
        )
    h = entropy(buf)
    hist_chi2, hist_p = histogram_uniformity_test(byte_histogram(buf))
    spectrum = half_spectrum(buf)
    ks, ks_p = rayleigh_test(spectrum)
    phase_chi2, phase_p = phase_uniform_test(spectrum)
    ratio = compression_ratio(buf, compressor)
    passed = (
        h >= MIN_ENTROPY
        and ratio >= MIN_COMPRESSION_RATIO
        and min(hist_p, ks_p, phase_p) > MIN_P_VALUE
    )
    return RandomnessReport(
        entropy=h,
        compression_ratio=ratio,
        compressor_id=compressor.id,
        histogram_chi2=hist_chi2,
        histogram_p=hist_p,
        rayleigh_ks=ks,
        rayleigh_p=ks_p,
        phase_chi2=phase_chi2,
        phase_p=phase_p,
        passed=bool(passed),
    )
