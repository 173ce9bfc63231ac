"""Seeded random streams keyed by (seed, stream_id).

Streams are backed by the counter-based Philox generator. The key is derived
from ``SeedSequence(seed, spawn_key=(stream_id,))``, so stream ``i`` of a run
is the same no matter which worker draws it or in what order.
"""
import numpy as np

__all__ = ["RngStream"]

_U64 = (1 << 64) - 1


class RngStream:
    def __init__(self, seed=0, stream_id=0):
        seed = int(seed)
        stream_id = int(stream_id)
        if not (0 <= seed <= _U64 and 0 <= stream_id <= _U64):
            raise ValueError("seed and stream_id must be unsigned 64-bit integers")
        self.seed = seed
        self.stream_id = stream_id
        ss = np.random.SeedSequence(seed, spawn_key=(stream_id,))
        self.generator = np.random.Generator(np.random.Philox(ss))

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"

    def standard_normal(self, size=None):
        return self.generator.standard_normal(size)

    def normal(self, loc=0.0, scale=1.0, size=None):
        return self.generator.normal(loc, scale, size)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self.generator.uniform(low, high, size)

    def random(self, size=None):
        return self.generator.random(size)

    def integers(self, low, high=None, size=None):
        return self.generator.integers(low, high, size)

    def permutation(self, x):
        return self.generator.permutation(x)
