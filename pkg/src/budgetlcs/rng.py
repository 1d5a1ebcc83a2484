"""Deterministic random streams: one root seed, hierarchical child streams."""

from __future__ import annotations

import numpy as np

__all__ = ["RngStream"]


class RngStream:
    """A splittable PCG64 stream.

    Every draw is a pure function of ``(seed, path, draw index)``: two streams
    constructed with the same seed and path produce identical sequences, and
    child streams are derived from the path rather than from parent state, so
    concurrent consumers cannot perturb each other.
    """

    __slots__ = ("seed", "path", "position", "_gen")

    def __init__(self, seed: int, path: tuple[int, ...] = ()):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.path = tuple(int(p) for p in path)
        self.position = 0
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=self.path)
        self._gen = np.random.Generator(np.random.PCG64(ss))

    def child(self, *key: int) -> "RngStream":
        """Independent stream addressed by ``path + key``; does not advance self."""
        return RngStream(self.seed, self.path + tuple(key))

    # -- scalar draws ------------------------------------------------------

    def random(self) -> float:
        self.position += 1
        return float(self._gen.random())

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi)."""
        self.position += 1
        return int(self._gen.integers(lo, hi))

    def geometric(self, p: float) -> int:
        """Geometric variate on {1, 2, ...} with success probability p."""
        self.position += 1
        return int(self._gen.geometric(p))

    # -- vector draws ------------------------------------------------------

    def random_array(self, size: int) -> np.ndarray:
        self.position += 1
        return self._gen.random(size)

    def integer_array(self, lo: int, hi: int, size: int) -> np.ndarray:
        self.position += 1
        return self._gen.integers(lo, hi, size=size)

    def geometric_array(self, p: float, size: int) -> np.ndarray:
        self.position += 1
        return self._gen.geometric(p, size=size)

    def choice_without_replacement(self, n: int, k: int) -> np.ndarray:
        self.position += 1
        return self._gen.choice(n, size=k, replace=False)

    def __repr__(self) -> str:  # pragma: no cover
        return f"RngStream(seed={self.seed}, path={self.path}, position={self.position})"
