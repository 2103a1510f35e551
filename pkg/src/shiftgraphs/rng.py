"""Seeded deterministic shuffling (splitmix64); fixtures stay portable."""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 stream; identical output on every platform."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)


def shuffled_permutation(n: int, seed: int) -> list[int]:
    """Fisher-Yates permutation of range(n) driven by splitmix64."""
    rng = SplitMix64(seed)
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.next() % (i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm
