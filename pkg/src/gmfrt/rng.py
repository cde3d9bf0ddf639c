"""SplitMix64 (Steele, Lea & Flood 2014), the counter-based seeding used for every walk.

Trial ``t`` of a run seeded with ``s`` walks on the SplitMix64 stream whose
state starts at ``derive_seed(s, t)``, the ``t``-th output of SplitMix64
seeded with ``s``. Each step draws one 64-bit word ``r`` and moves to
neighbour ``((r >> 32) * deg) >> 32`` of the sorted neighbour list.
"""

from __future__ import annotations

GAMMA = 0x9E3779B97F4A7C15
MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Output number ``index`` (0-based) of SplitMix64 started from ``seed``."""
    return mix64(seed + (index + 1) * GAMMA)


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Integer in ``[0, bound)`` from the high 32 bits (``bound < 2**32``)."""
        return ((self.next() >> 32) * bound) >> 32
