"""Fourier-domain image augmentation: PASTA, amplitude-spectrum baselines and band statistics."""
from ._accel import backend
from .baselines import (
    FdaConfig,
    MixupConfig,
    PhotometricConfig,
    amplitude_jitter,
    amplitude_mixup,
    apr_swap,
    fda_swap,
    photometric_distortion,
)
from .fourier import AmplitudePhase, ChannelSpectrum, decompose, fft2, fftshift, ifft2, ifftshift, recombine
from .pasta import pasta_channel, pasta_image, sample_epsilon
from .rng import RngStream
from .sigma import PAPER_DEFAULTS, PastaParams, SigmaField, build_reversed_sigma_field, build_sigma_field
from .stats import BandSpec, band_masks, compare_pre_post, corpus_band_stats, image_band_stds

__version__ = "0.1.0"
