"""Deterministic random-stream derivation shared by all sampling code."""

from __future__ import annotations

import numpy as np


def substream(seed: int, *path: int) -> np.random.Generator:
    """Return an independent generator keyed by ``(seed, *path)``.

    Identical arguments always yield an identical stream, and different
    paths yield statistically independent streams, so per-sample or
    per-draw substreams can be evaluated in any order (or in parallel)
    without changing results.
    """
    if seed < 0:
        raise ValueError("seed must be non-negative")
    key = (int(seed),) + tuple(int(k) for k in path)
    return np.random.default_rng(np.random.SeedSequence(key))
