"""Comparison augmentations: amplitude jitter (AJ), amplitude mixup (AM),
low-frequency amplitude swap (FDA), amplitude-phase recombination with a
donor image (APR-P), and photometric distortion (PD).

The frequency-domain methods all keep the source phase and only replace or
rescale the amplitude spectrum. Every ``*_spectra`` helper returns the
per-channel (amplitude, phase) pairs before the inverse FFT so the spectrum
level can be inspected directly.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DimensionMismatchError
from .fourier import AmplitudePhase, check_image, decompose, fft2, fftshift, ifft2, ifftshift, recombine

__all__ = [
    "MixupConfig",
    "FdaConfig",
    "PhotometricConfig",
    "PhotometricPlan",
    "amplitude_jitter",
    "amplitude_mixup",
    "fda_swap",
    "apr_swap",
    "photometric_distortion",
    "sample_photometric_plan",
    "apply_photometric_plan",
    "jitter_spectra",
    "mixup_spectra",
    "fda_spectra",
    "apr_spectra",
]


@dataclass(frozen=True)
class MixupConfig:
    lambda_min: float = 0.5
    lambda_max: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.lambda_min <= self.lambda_max <= 1.0):
            raise ValueError(f"need 0 <= lambda_min <= lambda_max <= 1, got {self.lambda_min}, {self.lambda_max}")


@dataclass(frozen=True)
class FdaConfig:
    band_fraction: float = 0.01

    def __post_init__(self):
        if not (0.0 <= self.band_fraction <= 1.0):
            raise ValueError(f"band_fraction must lie in [0, 1], got {self.band_fraction}")


def _channel_aps(img):
    return [decompose(fft2(img[:, :, c])) for c in range(img.shape[2])]


def _synthesize(aps, shape):
    out = np.empty(shape)
    for c, ap in enumerate(aps):
        out[:, :, c] = ifft2(recombine(ap))
    return np.clip(out, 0.0, 1.0, out=out)


def _same_shape(a, b, what):
    if a.shape != b.shape:
        raise DimensionMismatchError(f"{what} shape {b.shape} does not match source {a.shape}")


# --- AJ ---------------------------------------------------------------------


def jitter_spectra(image, scale):
    img = check_image(image)
    return [AmplitudePhase(scale * ap.amplitude, ap.phase) for ap in _channel_aps(img)]


def amplitude_jitter(image, beta, rng, jitter=None):
    """Scale every amplitude (all channels, all frequencies) by one draw from N(1, beta^2).

    ``jitter`` fixes the factor instead of drawing it.
    """
    if beta < 0:
        raise ValueError("beta must be >= 0")
    img = check_image(image)
    eps = float(rng.normal(1.0, beta)) if jitter is None else float(jitter)
    return _synthesize(jitter_spectra(img, eps), img.shape)


# --- AM ---------------------------------------------------------------------


def mixup_spectra(image, mix_image, lam):
    src = check_image(image)
    mix = check_image(mix_image)
    _same_shape(src, mix, "mix image")
    return [
        AmplitudePhase(lam * a.amplitude + (1.0 - lam) * b.amplitude, a.phase)
        for a, b in zip(_channel_aps(src), _channel_aps(mix))
    ]


def amplitude_mixup(image, mix_image, cfg, rng, lam=None):
    """Convex combination ``lam * A_src + (1 - lam) * A_mix``, one ``lam`` per image."""
    src = check_image(image)
    if lam is None:
        lam = float(rng.uniform(cfg.lambda_min, cfg.lambda_max))
    return _synthesize(mixup_spectra(src, mix_image, lam), src.shape)


# --- FDA --------------------------------------------------------------------


def fda_region(height, width, band_fraction):
    """Row and column slices of the centered low-frequency square."""
    side = int(np.floor(band_fraction * min(height, width)))
    r0 = height // 2 - side // 2
    c0 = width // 2 - side // 2
    return slice(r0, r0 + side), slice(c0, c0 + side)


def fda_spectra(image, target_image, band_fraction):
    src = check_image(image)
    trg = check_image(target_image)
    _same_shape(src, trg, "target image")
    rows, cols = fda_region(src.shape[0], src.shape[1], band_fraction)
    out = []
    for a, b in zip(_channel_aps(src), _channel_aps(trg)):
        amp = fftshift(a.amplitude).copy()
        amp[rows, cols] = fftshift(b.amplitude)[rows, cols]
        out.append(AmplitudePhase(ifftshift(amp), a.phase))
    return out


def fda_swap(image, target_image, cfg):
    src = check_image(image)
    return _synthesize(fda_spectra(src, target_image, cfg.band_fraction), src.shape)


# --- APR-P ------------------------------------------------------------------


def apr_spectra(image, donor_image):
    src = check_image(image)
    donor = check_image(donor_image)
    _same_shape(src, donor, "donor image")
    return [AmplitudePhase(b.amplitude, a.phase) for a, b in zip(_channel_aps(src), _channel_aps(donor))]


def apr_swap(image, donor_image):
    """Donor amplitude, source phase, per channel."""
    src = check_image(image)
    return _synthesize(apr_spectra(src, donor_image), src.shape)


# --- photometric distortion -------------------------------------------------


@dataclass(frozen=True)
class PhotometricConfig:
    brightness_delta: float = 32.0 / 255.0
    contrast_range: tuple = (0.5, 1.5)
    saturation_range: tuple = (0.5, 1.5)
    hue_delta_degrees: float = 18.0
    prob: float = 0.5


@dataclass(frozen=True)
class PhotometricPlan:
    """Concrete parameters for one PD pass; ``None`` skips the step."""

    brightness: float = None
    contrast_first: float = None
    saturation: float = None
    hue_degrees: float = None
    contrast_last: float = None
    channel_order: tuple = None


def sample_photometric_plan(rng, cfg=PhotometricConfig()):
    def coin():
        return rng.random() < cfg.prob

    # one coin then one value per step, in pipeline order
    brightness = float(rng.uniform(-cfg.brightness_delta, cfg.brightness_delta)) if coin() else None
    contrast_first = float(rng.uniform(*cfg.contrast_range)) if coin() else None
    saturation = float(rng.uniform(*cfg.saturation_range)) if coin() else None
    hue = float(rng.uniform(-cfg.hue_delta_degrees, cfg.hue_delta_degrees)) if coin() else None
    contrast_last = float(rng.uniform(*cfg.contrast_range)) if coin() else None
    order = tuple(int(i) for i in rng.permutation(3)) if coin() else None
    return PhotometricPlan(brightness, contrast_first, saturation, hue, contrast_last, order)


def apply_photometric_plan(image, plan, clamp=True):
    """Brightness, contrast, RGB->HSV, saturation, hue, HSV->RGB, contrast, channel swap.

    The HSV round trip only runs when a saturation or hue step is active and
    operates on values clamped to [0, 1].
    """
    img = check_image(image)
    if img.shape[2] != 3:
        raise ValueError(f"photometric distortion needs 3 channels, got {img.shape[2]}")
    out = img.copy()
    if plan.brightness is not None:
        out += plan.brightness
    if plan.contrast_first is not None:
        out *= plan.contrast_first
    if plan.saturation is not None or plan.hue_degrees is not None:
        hsv = kernels.rgb_to_hsv(np.ascontiguousarray(np.clip(out, 0.0, 1.0)))
        if plan.saturation is not None:
            hsv[..., 1] = np.clip(hsv[..., 1] * plan.saturation, 0.0, 1.0)
        if plan.hue_degrees is not None:
            hsv[..., 0] = (hsv[..., 0] + plan.hue_degrees / 360.0) % 1.0
        out = kernels.hsv_to_rgb(hsv)
    if plan.contrast_last is not None:
        out *= plan.contrast_last
    if plan.channel_order is not None:
        out = out[:, :, list(plan.channel_order)]
    if clamp:
        out = np.clip(out, 0.0, 1.0)
    return out


def photometric_distortion(image, rng, cfg=PhotometricConfig()):
    img = check_image(image)
    if img.shape[2] != 3:
        raise ValueError(f"photometric distortion needs 3 channels, got {img.shape[2]}")
    return apply_photometric_plan(img, sample_photometric_plan(rng, cfg))
