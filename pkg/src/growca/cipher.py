"""XOR stream cipher keyed by growing the register from a secret key.

The key seeds the automaton, the register is grown to the message length,
and the message is XORed against it. Encryption and decryption are the
same operation. Messages no longer than the key are XORed against the raw
key bytes (the register never steps), so there is no mixing at all below
the key length. The whole register is rewritten on every growth step, so
keystreams for different lengths are unrelated; keystream(key, n) is not a
prefix of keystream(key, m).

This construction is educational. It has no authentication, no nonce, and
no security analysis behind it; do not use it to protect real data.
"""

from __future__ import annotations

from .automaton import MIN_SEED_LENGTH, grow_to, seed_state
from .errors import (
    AllZeroSeedError,
    EmptySourceError,
    GrowCAError,
    SeedTooShortError,
)


class CipherKey(bytes):
    """Validated secret key material: at least 9 bytes, not all zero."""

    def __new__(cls, data) -> "CipherKey":
        key = super().__new__(cls, data)
        if len(key) < MIN_SEED_LENGTH:
            raise SeedTooShortError(
                f"key must be at least {MIN_SEED_LENGTH} bytes, got {len(key)}"
            )
        if not any(key):
            raise AllZeroSeedError("all-zero key would emit an all-zero keystream")
        return key


def keystream(key: CipherKey | bytes, length: int) -> bytes:
    """First `length` bytes of the register grown from the key.

    For length <= len(key) this is the raw key prefix: the register only
    grows, so no steps happen until the requested length exceeds the key.
    Deterministic in (key, length).
    """
    key = CipherKey(key)
    if length < 1:
        raise GrowCAError(f"keystream length must be >= 1, got {length}")
    if length <= len(key):
        return bytes(key[:length])
    return grow_to(seed_state(bytes(key)), length).cells


def crypt(key: CipherKey | bytes, data: bytes) -> bytes:
    """XOR `data` against keystream(key, len(data)).

    Self-inverse: crypt(key, crypt(key, x)) == x. Output length equals
    input length.
    """
    if len(data) == 0:
        raise EmptySourceError("refusing to process empty input")
    stream = keystream(key, len(data))
    return bytes(x ^ k for x, k in zip(data, stream))
