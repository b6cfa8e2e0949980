"""Self-contained discrete Fourier transform.

`fft` uses an iterative radix-2 transform for power-of-two lengths and
falls back to direct evaluation otherwise. Both paths return the full
complex spectrum with the negative-exponent sign convention, so results
are directly comparable with numpy.fft.fft.
"""

from __future__ import annotations

import numpy as np


def fft(x) -> np.ndarray:
    """Full complex DFT of a real or complex sequence."""
    n = len(x)
    if n == 0:
        raise ValueError("cannot transform an empty sequence")
    if n & (n - 1) == 0:
        return _fft_pow2(x)
    return dft_direct(x)


def dft_direct(x, block: int = 256) -> np.ndarray:
    """Direct O(n^2) evaluation; fallback for awkward lengths and the
    cross-check for the radix-2 path.

    Frequencies are processed in blocks so the twiddle matrix stays small.
    """
    v = np.asarray(x, dtype=np.complex128)
    n = len(v)
    out = np.empty(n, dtype=np.complex128)
    idx = np.arange(n)
    base = -2j * np.pi / n if n else 0.0
    for start in range(0, n, block):
        k = idx[start : start + block, None]
        out[start : start + block] = np.exp(base * k * idx) @ v
    return out


def _fft_pow2(x) -> np.ndarray:
    data = np.asarray(x, dtype=np.complex128)[_bit_reversal_order(len(x))]
    n = len(data)
    size = 2
    while size <= n:
        half = size // 2
        twiddle = np.exp((-2j * np.pi / size) * np.arange(half))
        blocks = data.reshape(n // size, size)
        upper = blocks[:, :half]
        lower = blocks[:, half:] * twiddle
        # upper must still hold its pre-butterfly values on the next line
        blocks[:, half:] = upper - lower
        upper += lower
        size *= 2
    return data


def _bit_reversal_order(n: int) -> np.ndarray:
    order = np.array([0], dtype=np.intp)
    while len(order) < n:
        order = np.concatenate([2 * order, 2 * order + 1])
    return order
