"""Counter-based 64-bit RNG (splitmix64 finalizer).

Sample i of a stream is a pure function of (seed, i): workers can generate
any block of indices independently and still produce the exact doubles a
sequential run draws, which is what makes the Monte Carlo estimates
bit-identical across worker counts.
"""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_INV_2_53 = float(2.0**-53)


def _finalize(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniform01(seed: int, indices) -> np.ndarray:
    """Doubles in [0, 1) for counter values `indices` under `seed`.

    uniform01(seed, i) == uniform01(seed, [.., i, ..])[k] for any split.
    """
    idx = np.asarray(indices, dtype=np.uint64)
    with np.errstate(over="ignore"):
        state = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + (idx + np.uint64(1)) * _GOLDEN
        z = _finalize(state)
    return (z >> np.uint64(11)).astype(np.float64) * _INV_2_53


def uniform_block(seed: int, start: int, count: int) -> np.ndarray:
    """uniform01 over the contiguous counter range [start, start + count)."""
    return uniform01(seed, np.arange(start, start + count, dtype=np.uint64))
