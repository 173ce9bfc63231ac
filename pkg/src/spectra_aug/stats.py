"""Per-band dispersion of log-amplitudes across an image corpus.

For each image: take the amplitude spectrum of every channel, zero-center
it, take the element-wise log, and compute the standard deviation of the
log-amplitudes inside each radial frequency band, pooling the cells of all
channels. Corpus statistics are the mean of the per-image values.
"""
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import DimensionMismatchError, EmptyDatasetError
from .fourier import check_image, fftshift
from .pasta import pasta_image
from .rng import RngStream
from .sigma import normalized_frequency_grid

__all__ = [
    "BandSpec",
    "BandMaskSet",
    "BandStatsRow",
    "BandStatsReport",
    "DEFAULT_LOG_FLOOR",
    "band_masks",
    "image_band_stds",
    "corpus_band_stats",
    "compare_pre_post",
]

DEFAULT_LOG_FLOOR = 1e-8


@dataclass(frozen=True)
class BandSpec:
    n_bands: int
    boundaries: tuple

    def __post_init__(self):
        b = tuple(float(v) for v in self.boundaries)
        if self.n_bands < 1 or len(b) != self.n_bands + 1:
            raise ValueError("need n_bands >= 1 and n_bands + 1 boundaries")
        if b[0] != 0.0 or b[-1] != 1.0 or any(hi <= lo for lo, hi in zip(b, b[1:])):
            raise ValueError(f"boundaries must increase strictly from 0 to 1, got {b}")
        object.__setattr__(self, "boundaries", b)

    @classmethod
    def equal(cls, n_bands):
        n_bands = int(n_bands)
        if n_bands < 1:
            raise ValueError("n_bands must be >= 1")
        edges = [i / n_bands for i in range(n_bands + 1)]
        return cls(n_bands, tuple(edges))


@dataclass(frozen=True)
class BandMaskSet:
    height: int
    width: int
    labels: np.ndarray = field(repr=False)  # (H, W) band index of each centered cell
    n_bands: int

    @property
    def masks(self):
        """Boolean masks, shape (n_bands, H, W)."""
        return self.labels[None, :, :] == np.arange(self.n_bands)[:, None, None]

    def mask(self, band):
        return self.labels == band


def band_masks(height, width, spec):
    return _band_masks(int(height), int(width), spec)


@lru_cache(maxsize=128)
def _band_masks(height, width, spec):
    f = normalized_frequency_grid(height, width)
    inner = np.asarray(spec.boundaries[1:-1])
    # band i holds boundaries[i] <= f < boundaries[i+1]; the last band also takes f == 1
    labels = np.searchsorted(inner, f, side="right").astype(np.int64)
    labels.setflags(write=False)
    return BandMaskSet(height, width, labels, spec.n_bands)


def _log_amplitudes(img, log_floor):
    amp = np.abs(np.fft.fft2(img, axes=(0, 1)))
    amp = fftshift(amp)
    # (C, H, W) for the pooled kernel
    return np.ascontiguousarray(np.log(np.maximum(amp, log_floor)).transpose(2, 0, 1))


def image_band_stds(image, masks, log_floor=DEFAULT_LOG_FLOOR):
    """Population std of floored log-amplitudes per band, pooled over channels."""
    img = check_image(image)
    if img.shape[:2] != (masks.height, masks.width):
        raise DimensionMismatchError(f"image {img.shape[:2]} vs masks {(masks.height, masks.width)}")
    logs = _log_amplitudes(img, log_floor)
    return kernels.band_pooled_std(logs, np.ascontiguousarray(masks.labels), masks.n_bands)


@dataclass(frozen=True)
class BandStatsRow:
    corpus: str
    n_bands: int
    band_index: int
    mean_log_amp_std: float
    n_images: int
    pre: float = None
    post: float = None
    delta: float = None

    @property
    def has_delta(self):
        return self.delta is not None


@dataclass(frozen=True)
class BandStatsReport:
    rows: tuple

    @property
    def has_deltas(self):
        return any(r.has_delta for r in self.rows)

    def values(self, corpus=None):
        return np.array([r.mean_log_amp_std for r in self.rows if corpus is None or r.corpus == corpus])

    def deltas(self, corpus=None):
        return np.array([r.delta for r in self.rows if corpus is None or r.corpus == corpus])

    def relabel(self, corpus):
        return BandStatsReport(tuple(replace(r, corpus=corpus) for r in self.rows))

    def __add__(self, other):
        return BandStatsReport(self.rows + other.rows)


def _mean_band_stds(corpus, spec, log_floor):
    total = np.zeros(spec.n_bands)
    count = 0
    for image in corpus:
        img = check_image(image)
        masks = band_masks(img.shape[0], img.shape[1], spec)
        total += image_band_stds(img, masks, log_floor)
        count += 1
    if count == 0:
        raise EmptyDatasetError("corpus is empty")
    return total / count, count


def corpus_band_stats(corpus, spec, log_floor=DEFAULT_LOG_FLOOR, label="corpus"):
    means, count = _mean_band_stds(corpus, spec, log_floor)
    rows = tuple(BandStatsRow(label, spec.n_bands, i, float(v), count) for i, v in enumerate(means))
    return BandStatsReport(rows)


def compare_pre_post(corpus, params, spec, seed=0, log_floor=DEFAULT_LOG_FLOOR, label="corpus", reversed=False):
    """Band statistics before and after PASTA; image ``i`` uses stream ``(seed, i)``.

    ``mean_log_amp_std`` carries the pre-augmentation value.
    """
    images = [check_image(im) for im in corpus]
    if not images:
        raise EmptyDatasetError("corpus is empty")
    pre, count = _mean_band_stds(images, spec, log_floor)
    augmented = (pasta_image(im, params, RngStream(seed, i), reversed=reversed) for i, im in enumerate(images))
    post, _ = _mean_band_stds(augmented, spec, log_floor)
    rows = tuple(
        BandStatsRow(label, spec.n_bands, i, float(a), count, pre=float(a), post=float(b), delta=float(b - a))
        for i, (a, b) in enumerate(zip(pre, post))
    )
    return BandStatsReport(rows)
