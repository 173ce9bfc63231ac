"""PASTA: frequency-proportional multiplicative jitter of the amplitude spectrum."""
import numpy as np

from .errors import DimensionMismatchError
from .fourier import AmplitudePhase, check_image, decompose, fft2, fftshift, ifft2, ifftshift, recombine
from .sigma import cached_sigma_field

__all__ = ["sample_epsilon", "perturb_spectrum", "pasta_channel", "pasta_image"]


def sample_epsilon(field, rng):
    """One draw of ``1 + sigma * z``, z standard normal, per cell (centered indexing).

    No truncation: cells with large sigma regularly come out negative.
    """
    z = rng.standard_normal(field.shape)
    return 1.0 + field.values * z


def perturb_spectrum(channel, field, rng):
    """Run PASTA up to (not including) the inverse FFT.

    Returns ``(original, perturbed)`` as :class:`AmplitudePhase` pairs in
    uncentered indexing; the perturbed pair keeps the original phase.
    """
    channel = np.asarray(channel, dtype=np.float64)
    if channel.shape != field.shape:
        raise DimensionMismatchError(f"channel {channel.shape} does not match sigma field {field.shape}")
    ap = decompose(fft2(channel))
    amp_centered = fftshift(ap.amplitude)
    eps = sample_epsilon(field, rng)
    perturbed = ifftshift(eps * amp_centered)
    return ap, AmplitudePhase(perturbed, ap.phase)


def pasta_channel(channel, field, rng):
    """Augment a single channel. The result is not clamped."""
    _, perturbed = perturb_spectrum(channel, field, rng)
    return ifft2(recombine(perturbed))


def pasta_image(image, params, rng, reversed=False):
    """Augment every channel with independent jitter draws (channel order 0, 1, 2), clamp to [0, 1]."""
    img = check_image(image)
    h, w, n_ch = img.shape
    field = cached_sigma_field(h, w, params, bool(reversed))
    out = np.empty_like(img)
    for c in range(n_ch):
        out[:, :, c] = pasta_channel(img[:, :, c], field, rng)
    return np.clip(out, 0.0, 1.0, out=out)
