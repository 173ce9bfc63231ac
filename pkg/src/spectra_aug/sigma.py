"""Per-frequency jitter strength grids for PASTA."""
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels

__all__ = [
    "PastaParams",
    "SigmaField",
    "PAPER_DEFAULTS",
    "normalized_frequency",
    "frequency_offsets",
    "normalized_frequency_grid",
    "build_sigma_field",
    "build_reversed_sigma_field",
    "cached_sigma_field",
]


@dataclass(frozen=True)
class PastaParams:
    alpha: float = 3.0
    k: float = 2.0
    beta: float = 0.25

    def __post_init__(self):
        for name in ("alpha", "k", "beta"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")
        # normalize ints so that the cache key for (3, 2, 0.25) and (3.0, 2.0, 0.25) matches
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "k", float(self.k))
        object.__setattr__(self, "beta", float(self.beta))


PAPER_DEFAULTS = PastaParams(alpha=3.0, k=2.0, beta=0.25)


@dataclass(frozen=True)
class SigmaField:
    values: np.ndarray = field(repr=False)  # centered indexing, read-only
    params: PastaParams
    reversed: bool = False

    @property
    def height(self):
        return self.values.shape[0]

    @property
    def width(self):
        return self.values.shape[1]

    @property
    def shape(self):
        return self.values.shape


def normalized_frequency(m, n, height, width):
    """Radial frequency of offset (m, n) scaled so an even-size corner maps to 1."""
    if abs(m) > math.ceil(height / 2) or abs(n) > math.ceil(width / 2):
        raise ValueError(f"offset ({m}, {n}) outside the {height} x {width} frequency grid")
    return 2.0 * math.sqrt((m * m + n * n) / (height * height + width * width))


def frequency_offsets(size):
    """Signed offsets aligned with fftshift: ``[-(size // 2), ceil(size / 2) - 1]``."""
    return np.arange(size) - size // 2


def normalized_frequency_grid(height, width):
    m = frequency_offsets(height).astype(np.float64)
    n = frequency_offsets(width).astype(np.float64)
    return 2.0 * np.sqrt((m[:, None] ** 2 + n[None, :] ** 2) / float(height * height + width * width))


def _build(height, width, params, reverse):
    if height < 1 or width < 1:
        raise ValueError("grid dimensions must be positive")
    values = kernels.sigma_grid(int(height), int(width), params.alpha, params.k, params.beta, reverse)
    values.setflags(write=False)
    return SigmaField(values, params, reverse)


def build_sigma_field(height, width, params):
    """sigma = (alpha * f)^k + beta with f the normalized radial frequency."""
    return _build(height, width, params, False)


def build_reversed_sigma_field(height, width, params):
    """Mirror image of :func:`build_sigma_field`: low frequencies get the strongest jitter."""
    return _build(height, width, params, True)


@lru_cache(maxsize=64)
def cached_sigma_field(height, width, params, reverse=False):
    return _build(height, width, params, reverse)
