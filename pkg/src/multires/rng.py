"""Deterministic 64-bit PRNG (splitmix64).

All randomness in the package (synthetic audio, parameter init, toy datasets)
flows through this generator so runs are reproducible bit-for-bit from a seed
and the algorithm is simple enough to restate in any language: the state
advances by the golden-gamma constant 0x9E3779B97F4A7C15 per draw and the
output is the finalizer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

Doubles take the top 53 bits: u64 >> 11 times 2**-53, uniform in [0, 1).
"""

from __future__ import annotations

import numpy as np

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)
_DOUBLE_SCALE = float(2.0 ** -53)


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


class SplitMix64:
    """Sequential splitmix64 stream seeded by a Python int."""

    def __init__(self, seed: int):
        self._state = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)

    def next_u64(self) -> int:
        with np.errstate(over="ignore"):
            self._state = (self._state + _GAMMA) & _MASK
            return int(_mix(self._state))

    def next_double(self) -> float:
        return (self.next_u64() >> 11) * _DOUBLE_SCALE

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_double()

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi), by 53-bit double scaling."""
        return lo + int(self.next_double() * (hi - lo))

    def fill_uniform(self, shape, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
        """Vectorized draw of prod(shape) doubles, advancing the stream."""
        n = int(np.prod(shape)) if shape else 1
        with np.errstate(over="ignore"):
            idx = np.arange(1, n + 1, dtype=np.uint64)
            states = (self._state + idx * _GAMMA) & _MASK
            self._state = states[-1] if n else self._state
            u = (_mix(states) >> np.uint64(11)).astype(np.float64) * _DOUBLE_SCALE
        return lo + (hi - lo) * u.reshape(shape)

    def spawn(self, tag: int) -> "SplitMix64":
        """Independent child stream; mixes the tag into the current state."""
        with np.errstate(over="ignore"):
            child = _mix((self._state + np.uint64(tag & 0xFFFFFFFFFFFFFFFF) * _GAMMA + _GAMMA) & _MASK)
        return SplitMix64(int(child))
