"""
SplitMix64 pseudo-random generator.

A fixed, documented generator so seeded experiments reproduce bit-for-bit
inside this implementation. Each trial of an experiment draws from its own
stream derived from ``(seed, trial_index)``, which keeps serial and parallel
runs identical.

Algorithm (Steele, Lea & Flood's SplitMix64):

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

Bounded integers use rejection sampling so every residue is equally likely;
normal deviates use the Box–Muller transform.
"""

import math

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_STREAM_MIX = 0xD1B54A32D192ED03


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """
    64-bit SplitMix generator.

    Args:
        seed: Any integer; reduced modulo 2**64.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK
        self._spare_normal: float | None = None

    @classmethod
    def for_stream(cls, seed: int, stream: int) -> "SplitMix64":
        """Return an independent generator for stream ``stream`` of ``seed``."""
        base = _mix((seed + _GOLDEN) & _MASK)
        return cls(base ^ _mix(((stream + 1) * _STREAM_MIX) & _MASK))

    def next_u64(self) -> int:
        """Return the next raw 64-bit output."""
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix(self._state)

    def randbelow(self, n: int) -> int:
        """Return a uniform integer in ``[0, n)`` by rejection sampling."""
        if n <= 0:
            raise ValueError(f"randbelow() needs a positive bound, got {n}")
        limit = ((1 << 64) // n) * n
        while True:
            value = self.next_u64()
            if value < limit:
                return value % n

    def random(self) -> float:
        """Return a uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def standard_normal(self) -> float:
        """Return a standard normal deviate (Box–Muller, pairs cached)."""
        if self._spare_normal is not None:
            value = self._spare_normal
            self._spare_normal = None
            return value
        u1 = 1.0 - self.random()
        u2 = self.random()
        radius = math.sqrt(-2.0 * math.log(u1))
        angle = 2.0 * math.pi * u2
        self._spare_normal = radius * math.sin(angle)
        return radius * math.cos(angle)

    def sign(self) -> float:
        """Return ``+1.0`` or ``-1.0`` with equal probability."""
        return 1.0 if self.next_u64() >> 63 else -1.0

    def sample(self, population: int, size: int) -> list[int]:
        """
        Return ``size`` distinct integers from ``range(population)``, sorted.

        Partial Fisher–Yates shuffle driven by :meth:`randbelow`.
        """
        if not 0 <= size <= population:
            raise ValueError(f"cannot sample {size} items from {population}")
        pool = list(range(population))
        for i in range(size):
            j = i + self.randbelow(population - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:size])

    def __repr__(self) -> str:
        return f"SplitMix64(state={self._state:#018x})"
