"""2D discrete Fourier analysis/synthesis and amplitude/phase decomposition.

Convention: the forward transform is unnormalized,

    F[m, n] = sum_{h, w} x[h, w] * exp(-2*pi*i*(h*m/H + w*n/W)),

and the inverse carries the 1/(H*W) factor.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NonFiniteError

__all__ = [
    "ChannelSpectrum",
    "AmplitudePhase",
    "fft2",
    "ifft2",
    "fftshift",
    "ifftshift",
    "decompose",
    "recombine",
    "check_image",
]


@dataclass(frozen=True)
class ChannelSpectrum:
    cells: np.ndarray  # complex128, (H, W)
    centered: bool = False

    @property
    def shape(self):
        return self.cells.shape


@dataclass(frozen=True)
class AmplitudePhase:
    amplitude: np.ndarray
    phase: np.ndarray  # radians in (-pi, pi]
    centered: bool = False


def _require_finite(arr, what):
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{what} contains non-finite values")


def check_image(image):
    """Validate an H x W x C image (C in {1, 3}) and return it as float64.

    2D input is promoted to a single channel.
    """
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim == 2:
        arr = arr[:, :, None]
    if arr.ndim != 3 or arr.shape[2] not in (1, 3):
        raise ValueError(f"expected an H x W x C image with C in {{1, 3}}, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError("image must be at least 1 x 1")
    _require_finite(arr, "image")
    return arr


def fft2(channel):
    x = np.asarray(channel, dtype=np.float64)
    if x.ndim != 2 or x.size == 0:
        raise ValueError(f"expected a non-empty 2D channel, got shape {x.shape}")
    _require_finite(x, "channel")
    return ChannelSpectrum(np.fft.fft2(x), centered=False)


def ifft2(spectrum):
    """Inverse transform; returns the real part and discards imaginary residue."""
    if spectrum.centered:
        raise ValueError("ifft2 expects an uncentered spectrum; apply ifftshift first")
    _require_finite(spectrum.cells, "spectrum")
    return np.fft.ifft2(spectrum.cells).real


def fftshift(grid):
    """Move the zero-frequency cell to (H // 2, W // 2)."""
    return np.fft.fftshift(grid, axes=(0, 1))


def ifftshift(grid):
    return np.fft.ifftshift(grid, axes=(0, 1))


def decompose(spectrum):
    cells = spectrum.cells
    # four-quadrant angle; arctan(Im/Re) would lose the quadrant
    phase = np.angle(cells)
    # a negative zero imaginary part yields -pi; keep the range (-pi, pi]
    phase[phase == -np.pi] = np.pi
    return AmplitudePhase(np.abs(cells), phase, centered=spectrum.centered)


def recombine(ap):
    """Rebuild ``A * (cos P + i sin P)``. Negative amplitudes fold into a pi phase flip."""
    amp = np.ascontiguousarray(ap.amplitude, dtype=np.float64)
    phase = np.ascontiguousarray(ap.phase, dtype=np.float64)
    if amp.shape != phase.shape:
        raise ValueError(f"amplitude {amp.shape} and phase {phase.shape} differ in shape")
    return ChannelSpectrum(kernels.polar_to_complex(amp, phase), centered=ap.centered)
