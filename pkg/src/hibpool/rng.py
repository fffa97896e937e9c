"""Deterministic RNG streams derived from a single experiment seed.

Every stochastic component (fold shuffles, parameter init, Louvain visit
order, noise draws, ...) pulls its own independent stream keyed by a tag
tuple, so results are reproducible regardless of evaluation order or
worker scheduling.
"""

from __future__ import annotations

import zlib

import numpy as np


def _encode(tag) -> int:
    if isinstance(tag, (int, np.integer)):
        return int(tag) & 0xFFFFFFFF
    if isinstance(tag, str):
        return zlib.crc32(tag.encode("utf-8"))
    raise TypeError(f"rng tag must be int or str, got {type(tag).__name__}")


def rng_for(seed: int, *tags) -> np.random.Generator:
    """Generator for stream (seed, *tags); same arguments, same stream."""
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [_encode(t) for t in tags]
    return np.random.default_rng(np.random.SeedSequence(entropy))
