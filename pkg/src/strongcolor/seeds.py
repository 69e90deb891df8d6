"""Deterministic seed substream derivation.

All randomness in this package flows from a single root 64-bit seed.
Independent substreams (per trial, per restart, per pipeline stage) are
derived by absorbing a sequence of stream labels into the root seed with
splitmix64 steps.  The derivation is a pure function of
``(seed, labels...)``, so trials are reproducible and order-independent:
trial 17 gets the same stream whether or not trials 0..16 ran first.
"""

from __future__ import annotations

import random

_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    # One output step of Steele/Lea/Flood's splitmix64 generator.
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def substream(seed: int, *labels: int | str) -> int:
    """Derive a 64-bit substream seed from a root seed and stream labels.

    Labels may be small integers (trial indices, restart counters) or
    short strings naming a stage.  Strings are absorbed byte by byte.
    """
    x = _splitmix64(seed & _MASK64)
    for label in labels:
        if isinstance(label, str):
            for b in label.encode("utf-8"):
                x = _splitmix64(x ^ b)
        else:
            x = _splitmix64(x ^ (label & _MASK64))
    return x


def stream_rng(seed: int, *labels: int | str) -> random.Random:
    """A ``random.Random`` seeded from the derived substream."""
    return random.Random(substream(seed, *labels))
