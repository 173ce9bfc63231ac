"""Per-cell numeric kernels with a compiled and a vectorized implementation.

Each kernel exists twice: a loop form compiled with numba (``*_loop``) and a
pure-numpy form (``*_numpy``). The public names bound at the bottom of this
module pick one according to :mod:`spectra_aug._accel`. Both forms must agree
to floating-point rounding; ``tests/test_kernels.py`` checks that.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

__all__ = [
    "sigma_grid",
    "polar_to_complex",
    "band_pooled_std",
    "rgb_to_hsv",
    "hsv_to_rgb",
]


# --- sigma grid -------------------------------------------------------------


@njit
def sigma_grid_loop(height, width, alpha, k, beta, reverse):
    out = np.empty((height, width), dtype=np.float64)
    denom = float(height * height + width * width)
    h0 = height // 2
    w0 = width // 2
    for i in range(height):
        m = i - h0
        for j in range(width):
            n = j - w0
            f = 2.0 * np.sqrt((m * m + n * n) / denom)
            if reverse:
                f = 1.0 - f
            # pow(0, 0) == 1 in C, so k == 0 gives a constant 1 + beta
            out[i, j] = (alpha * f) ** k + beta
    return out


def sigma_grid_numpy(height, width, alpha, k, beta, reverse):
    m = np.arange(height, dtype=np.float64) - height // 2
    n = np.arange(width, dtype=np.float64) - width // 2
    f = 2.0 * np.sqrt((m[:, None] ** 2 + n[None, :] ** 2) / float(height * height + width * width))
    if reverse:
        f = 1.0 - f
    return np.power(alpha * f, k) + beta


# --- amplitude/phase -> complex ---------------------------------------------


@njit
def polar_to_complex_loop(amplitude, phase):
    h, w = amplitude.shape
    out = np.empty((h, w), dtype=np.complex128)
    for i in range(h):
        for j in range(w):
            a = amplitude[i, j]
            p = phase[i, j]
            out[i, j] = complex(a * np.cos(p), a * np.sin(p))
    return out


def polar_to_complex_numpy(amplitude, phase):
    out = np.empty(amplitude.shape, dtype=np.complex128)
    out.real = amplitude * np.cos(phase)
    out.imag = amplitude * np.sin(phase)
    return out


# --- pooled per-band population std ------------------------------------------


@njit
def band_pooled_std_loop(values, labels, n_bands):
    # values: (C, H, W); labels: (H, W) band index per cell, shared by channels
    n_ch, h, w = values.shape
    count = np.zeros(n_bands, dtype=np.float64)
    total = np.zeros(n_bands, dtype=np.float64)
    for c in range(n_ch):
        for i in range(h):
            for j in range(w):
                b = labels[i, j]
                count[b] += 1.0
                total[b] += values[c, i, j]
    mean = np.zeros(n_bands, dtype=np.float64)
    for b in range(n_bands):
        if count[b] > 0:
            mean[b] = total[b] / count[b]
    sq = np.zeros(n_bands, dtype=np.float64)
    for c in range(n_ch):
        for i in range(h):
            for j in range(w):
                b = labels[i, j]
                d = values[c, i, j] - mean[b]
                sq[b] += d * d
    out = np.zeros(n_bands, dtype=np.float64)
    for b in range(n_bands):
        if count[b] > 0:
            out[b] = np.sqrt(sq[b] / count[b])
    return out


def band_pooled_std_numpy(values, labels, n_bands):
    n_ch = values.shape[0]
    flat_labels = np.tile(labels.ravel(), n_ch)
    flat = values.reshape(-1)
    count = np.bincount(flat_labels, minlength=n_bands).astype(np.float64)
    total = np.bincount(flat_labels, weights=flat, minlength=n_bands)
    mean = np.divide(total, count, out=np.zeros(n_bands), where=count > 0)
    dev = flat - mean[flat_labels]
    sq = np.bincount(flat_labels, weights=dev * dev, minlength=n_bands)
    return np.sqrt(np.divide(sq, count, out=np.zeros(n_bands), where=count > 0))


# --- RGB <-> HSV (hue in [0, 1)) ---------------------------------------------


@njit
def rgb_to_hsv_loop(rgb):
    h, w, _ = rgb.shape
    out = np.empty((h, w, 3), dtype=np.float64)
    for i in range(h):
        for j in range(w):
            r = rgb[i, j, 0]
            g = rgb[i, j, 1]
            b = rgb[i, j, 2]
            mx = max(r, g, b)
            mn = min(r, g, b)
            delta = mx - mn
            hue = 0.0
            sat = 0.0
            if mx > 0.0:
                sat = delta / mx
            if delta > 0.0:
                if r == mx:
                    hue = (g - b) / delta
                elif g == mx:
                    hue = 2.0 + (b - r) / delta
                else:
                    hue = 4.0 + (r - g) / delta
                hue = (hue / 6.0) % 1.0
            out[i, j, 0] = hue
            out[i, j, 1] = sat
            out[i, j, 2] = mx
    return out


def rgb_to_hsv_numpy(rgb):
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    mx = rgb.max(axis=-1)
    mn = rgb.min(axis=-1)
    delta = mx - mn
    sat = np.divide(delta, mx, out=np.zeros_like(mx), where=mx > 0)
    safe = np.where(delta > 0, delta, 1.0)
    hue = np.where(
        r == mx,
        (g - b) / safe,
        np.where(g == mx, 2.0 + (b - r) / safe, 4.0 + (r - g) / safe),
    )
    hue = np.where(delta > 0, (hue / 6.0) % 1.0, 0.0)
    return np.stack([hue, sat, mx], axis=-1)


@njit
def hsv_to_rgb_loop(hsv):
    h, w, _ = hsv.shape
    out = np.empty((h, w, 3), dtype=np.float64)
    for i in range(h):
        for j in range(w):
            hue = hsv[i, j, 0] % 1.0
            s = hsv[i, j, 1]
            v = hsv[i, j, 2]
            sector = hue * 6.0
            idx = int(np.floor(sector)) % 6
            f = sector - np.floor(sector)
            p = v * (1.0 - s)
            q = v * (1.0 - s * f)
            t = v * (1.0 - s * (1.0 - f))
            if idx == 0:
                r, g, b = v, t, p
            elif idx == 1:
                r, g, b = q, v, p
            elif idx == 2:
                r, g, b = p, v, t
            elif idx == 3:
                r, g, b = p, q, v
            elif idx == 4:
                r, g, b = t, p, v
            else:
                r, g, b = v, p, q
            out[i, j, 0] = r
            out[i, j, 1] = g
            out[i, j, 2] = b
    return out


def hsv_to_rgb_numpy(hsv):
    hue = hsv[..., 0] % 1.0
    s = hsv[..., 1]
    v = hsv[..., 2]
    sector = hue * 6.0
    idx = np.floor(sector).astype(np.int64) % 6
    f = sector - np.floor(sector)
    p = v * (1.0 - s)
    q = v * (1.0 - s * f)
    t = v * (1.0 - s * (1.0 - f))
    r = np.choose(idx, [v, q, p, p, t, v])
    g = np.choose(idx, [t, v, v, q, p, p])
    b = np.choose(idx, [p, p, t, v, v, q])
    return np.stack([r, g, b], axis=-1)


if USE_NUMBA:
    sigma_grid = sigma_grid_loop
    polar_to_complex = polar_to_complex_loop
    band_pooled_std = band_pooled_std_loop
    rgb_to_hsv = rgb_to_hsv_loop
    hsv_to_rgb = hsv_to_rgb_loop
else:
    sigma_grid = sigma_grid_numpy
    polar_to_complex = polar_to_complex_numpy
    band_pooled_std = band_pooled_std_numpy
    rgb_to_hsv = rgb_to_hsv_numpy
    hsv_to_rgb = hsv_to_rgb_numpy
