import numpy as np


def smooth_image(rng, size=128, grain=0.03):
    """Gradient plus a few low-frequency sinusoids and mild sensor grain, 3 channels."""
    yy, xx = np.mgrid[0:size, 0:size] / size
    base = rng.uniform(0.35, 0.65)
    chans = []
    for _ in range(3):
        v = base + 0.1 * (xx * rng.uniform(-1, 1) + yy * rng.uniform(-1, 1))
        for _ in range(2):
            fx, fy = rng.integers(1, 4), rng.integers(0, 4)
            v = v + 0.08 * np.sin(2 * np.pi * (fx * xx + fy * yy) + rng.uniform(0, 2 * np.pi))
        v = v + grain * rng.standard_normal((size, size))
        chans.append(v)
    return np.clip(np.stack(chans, axis=-1), 0.0, 1.0)


def smooth_corpus(n_images=30, size=128, seed=0):
    rng = np.random.default_rng(seed)
    return [smooth_image(rng, size) for _ in range(n_images)]


def noise_corpus(n_images=10, size=64, seed=0):
    rng = np.random.default_rng(seed)
    return [rng.random((size, size, 3)) for _ in range(n_images)]


def gradient_corpus(n_images=10, size=64, seed=0):
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:size, 0:size] / size
    out = []
    for _ in range(n_images):
        a, b = rng.uniform(-0.4, 0.4, 2)
        out.append(np.repeat((0.5 + a * (xx - 0.5) + b * (yy - 0.5))[:, :, None], 3, axis=2))
    return out


def rel_spread(values):
    values = np.asarray(values, dtype=float)
    return float((values.max() - values.min()) / abs(values.mean()))


def band_limited_image(rng, size=64, blur=4.0):
    """Gaussian-blurred noise around mid-gray: smooth, no content near Nyquist."""
    f = np.fft.fftfreq(size)
    gain = np.exp(-(f[:, None] ** 2 + f[None, :] ** 2) * (2 * np.pi * blur) ** 2 / 2)
    chans = [0.5 + 0.5 * np.fft.ifft2(np.fft.fft2(rng.standard_normal((size, size))) * gain).real for _ in range(3)]
    return np.clip(np.stack(chans, axis=-1), 0.0, 1.0)


def band_limited_corpus(n_images=10, size=64, seed=0):
    rng = np.random.default_rng(seed)
    return [band_limited_image(rng, size) for _ in range(n_images)]
