"""End-to-end acceptance battery.

One test per shipping criterion, each asserting its pinned tolerance and
printing a single verdict line (shown with `pytest -s`, or in the
captured-output section on failure). Criteria that examine the grown
2**15 stream share one module-scoped build of it.
"""

import hashlib
import random
import time

import numpy as np
import pytest

from growca.automaton import CAState, diffuse, grow_to, seed_state
from growca.cipher import crypt
from growca.errors import (
    AllZeroSeedError,
    EmptySourceError,
    SeedTooShortError,
)
from growca.fourier import fft
from growca.randomness import (
    byte_histogram,
    compression_ratio,
    entropy,
    get_compressor,
    half_spectrum,
    histogram_uniformity_test,
    phase_uniform_test,
    rayleigh_test,
)
from reference import reference_grow

SEED = b"abcdefghijklmnop"
STREAM_LENGTH = 2**15

# reference_entropy over the reference-grown 2**15 stream, frozen so any
# platform or refactor drift trips the comparison
EXPECTED_ENTROPY = 0.9993882799247457

# sha256 of the 2**15 stream grown from SEED, frozen for the same reason
EXPECTED_DIGEST = "b9100cfb090048839ce6802e370d5e72d4a48f1edc3c3833e55fc84f9612949f"


@pytest.fixture(scope="module")
def grown():
    start = time.perf_counter()
    state = grow_to(seed_state(SEED), STREAM_LENGTH)
    return state.cells, time.perf_counter() - start


def test_criterion_01_growth_matches_reference_oracle():
    rng = random.Random(20260819)
    start = time.perf_counter()
    for _ in range(100):
        length = rng.randint(9, 64)
        seed = bytes(rng.randrange(256) for _ in range(length))
        if not any(seed):
            seed = b"\x01" + seed[1:]
        steps = rng.randint(0, 200)
        grown_cells = grow_to(seed_state(seed), length + steps).cells
        assert grown_cells == reference_grow(seed, steps)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    print(
        f"criterion 01 PASS: 100 random growths byte-identical to the"
        f" straight-line oracle ({elapsed:.2f}s < 10s)"
    )


def test_criterion_02_entropy_of_grown_stream(grown):
    cells, grow_seconds = grown
    start = time.perf_counter()
    h = entropy(cells)
    elapsed = grow_seconds + time.perf_counter() - start
    assert 0.997 <= h <= 1.0
    assert h == pytest.approx(EXPECTED_ENTROPY, abs=1e-12)
    assert elapsed < 5.0
    print(
        f"criterion 02 PASS: entropy {h!r} in [0.997, 1.0] and within 1e-12"
        f" of the pinned oracle value ({elapsed:.2f}s < 5s)"
    )


def test_criterion_03_grown_stream_defeats_bzip2(grown):
    cells, _ = grown
    start = time.perf_counter()
    ratio = compression_ratio(cells, get_compressor("bzip2-9"))
    elapsed = time.perf_counter() - start
    assert ratio >= 1.0
    assert elapsed < 2.0
    print(f"criterion 03 PASS: bzip2-9 ratio {ratio:.6f} >= 1.0 ({elapsed:.2f}s < 2s)")


def test_criterion_04_spectrum_fits_rayleigh_with_uniform_phases(grown):
    cells, _ = grown
    start = time.perf_counter()
    spectrum = half_spectrum(cells)
    _, rayleigh_p = rayleigh_test(spectrum)
    _, phase_p = phase_uniform_test(spectrum)
    elapsed = time.perf_counter() - start
    assert rayleigh_p > 0.001
    assert phase_p > 0.001
    assert elapsed < 5.0
    print(
        f"criterion 04 PASS: Rayleigh p {rayleigh_p:.4f} and phase p"
        f" {phase_p:.4f} both > 0.001 ({elapsed:.2f}s < 5s)"
    )


def test_criterion_05_byte_histogram_is_uniform(grown):
    cells, _ = grown
    _, p = histogram_uniformity_test(byte_histogram(cells))
    assert p > 0.001
    print(f"criterion 05 PASS: 256-bin chi-square p {p:.4f} > 0.001")


def test_criterion_06_decrypt_inverts_encrypt():
    rng = random.Random(0xC0FFEE)
    start = time.perf_counter()
    for _ in range(200):
        key = rng.randbytes(rng.randint(9, 48))
        if not any(key):
            key = b"\x01" + key[1:]
        message = rng.randbytes(rng.randint(1, 4096))
        assert crypt(key, crypt(key, message)) == message
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    print(
        f"criterion 06 PASS: 200 random encrypt/decrypt round trips"
        f" byte-exact ({elapsed:.2f}s < 5s)"
    )


def test_criterion_07_degenerate_inputs_are_rejected():
    with pytest.raises(AllZeroSeedError):
        seed_state(bytes(16))
    with pytest.raises(SeedTooShortError):
        seed_state(b"\x01" * 8)
    with pytest.raises(EmptySourceError):
        crypt(b"abcdefghijklmnop", b"")
    for length in range(9, 65):
        assert diffuse(CAState(bytes(length))) == bytes(length)
    print(
        "criterion 07 PASS: all-zero seed, 8-byte seed, and empty message"
        " rejected; zero register fixed under diffusion for lengths 9-64"
    )


def test_criterion_08_parseval_energy_conservation():
    rng = np.random.default_rng(4242)
    worst = 0.0
    for _ in range(20):
        x = rng.integers(0, 256, size=256).astype(np.float64)
        centered = x - x.mean()
        energy_spectral = float(np.sum(np.abs(fft(centered)) ** 2))
        energy_signal = 256.0 * float(np.sum(centered * centered))
        worst = max(worst, abs(energy_spectral - energy_signal) / energy_signal)
    assert worst < 1e-6
    print(
        f"criterion 08 PASS: full-spectrum energy matches L*sum((x-mean)^2)"
        f" on 20 random inputs (worst relative error {worst:.2e} < 1e-6)"
    )


def test_criterion_09_growth_is_deterministic(grown):
    cells, _ = grown
    again = grow_to(seed_state(SEED), STREAM_LENGTH).cells
    first = hashlib.sha256(cells).hexdigest()
    second = hashlib.sha256(again).hexdigest()
    assert first == second == EXPECTED_DIGEST
    print(f"criterion 09 PASS: sha256 {first[:16]}... identical across runs and pinned")


def test_criterion_10_growth_performance_floor():
    start = time.perf_counter()
    state = grow_to(seed_state(SEED), STREAM_LENGTH)
    elapsed = time.perf_counter() - start
    assert len(state) == STREAM_LENGTH
    assert elapsed < 2.0
    print(f"criterion 10 PASS: 16 -> 32768 cells in {elapsed:.3f}s < 2s")
