"""Stable 64-bit hashing used for feature hashing and seed derivation.

Python's builtin ``hash`` is salted per process, so every hash the pipeline
relies on goes through the FNV-1a multiply-xor scheme below.  The variant
here consumes one 32-bit unit per Unicode codepoint (rather than UTF-8
bytes) so that the same loop can be vectorised over n-gram windows with
numpy uint64 arithmetic.

Conventions, fixed for the life of the on-disk formats:

* state starts at ``FNV_OFFSET ^ seed`` (seed taken modulo 2**64);
* per codepoint: ``state = (state ^ codepoint) * FNV_PRIME`` (mod 2**64);
* feature index = low ``log2(dim)`` bits of the final state;
* feature sign  = +1 when the top bit of the final state is 0, else -1.
"""

from __future__ import annotations

import numpy as np

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3

_MASK64 = (1 << 64) - 1


def fnv1a64(codepoints, seed: int = 0) -> int:
    """Reference scalar implementation over an iterable of codepoints."""
    state = (FNV_OFFSET ^ (seed & _MASK64)) & _MASK64
    for cp in codepoints:
        state = ((state ^ cp) * FNV_PRIME) & _MASK64
    return state


def hash_string(text: str, seed: int = 0) -> int:
    return fnv1a64((ord(c) for c in text), seed)


def derive_seed(master_seed: int, stage: str) -> int:
    """Per-stage RNG seed derived from the single pipeline seed.

    Every random choice in the pipeline draws from a generator seeded with
    ``derive_seed(config_seed, stage_name)``, so one config seed reproduces
    the whole run while stages stay decoupled.
    """
    return hash_string(stage, seed=master_seed) & 0x7FFFFFFFFFFFFFFF


def hash_ngrams(codepoints: np.ndarray, n: int, seed: int = 0) -> np.ndarray:
    """Hashes of every length-``n`` window of ``codepoints``, vectorised.

    Returns a uint64 array of length ``max(len(codepoints) - n + 1, 0)``,
    bit-identical to applying :func:`fnv1a64` to each window.
    """
    m = len(codepoints) - n + 1
    if m <= 0:
        return np.empty(0, dtype=np.uint64)
    cps = codepoints.astype(np.uint64, copy=False)
    state = np.full(m, FNV_OFFSET ^ (seed & _MASK64), dtype=np.uint64)
    prime = np.uint64(FNV_PRIME)
    for k in range(n):
        state = (state ^ cps[k:k + m]) * prime
    return state
