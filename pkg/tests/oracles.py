"""Independent reference implementations used to check the package.

Nothing here imports the code under test except ``RngStream`` (to replay
the same normal draws).
"""
import cmath
import math
import statistics


def naive_dft2(x):
    """Direct double sum, no 1/(HW) factor. ``x`` is a list of rows."""
    h, w = len(x), len(x[0])
    out = [[0j] * w for _ in range(h)]
    for m in range(h):
        for n in range(w):
            acc = 0j
            for a in range(h):
                for b in range(w):
                    acc += x[a][b] * cmath.exp(-2j * math.pi * (a * m / h + b * n / w))
            out[m][n] = acc
    return out


def naive_idft2(spec):
    h, w = len(spec), len(spec[0])
    out = [[0j] * w for _ in range(h)]
    for a in range(h):
        for b in range(w):
            acc = 0j
            for m in range(h):
                for n in range(w):
                    acc += spec[m][n] * cmath.exp(2j * math.pi * (a * m / h + b * n / w))
            out[a][b] = acc / (h * w)
    return out


def offset(i, size):
    """Signed frequency offset of uncentered index ``i`` (DC at 0)."""
    return (i + size // 2) % size - size // 2


def f_norm(m, n, h, w):
    return 2.0 * math.sqrt((m * m + n * n) / (h * h + w * w))


def sigma(m, n, h, w, alpha, k, beta):
    return (2.0 * alpha * math.sqrt((m * m + n * n) / (h * h + w * w))) ** k + beta


def reference_pasta_channel(x, alpha, k, beta, z_centered):
    """Straight-line PASTA on one channel.

    ``z_centered[i][j]`` is the standard normal draw for the cell at
    centered position (i, j), i.e. offset (i - h//2, j - w//2).
    """
    h, w = len(x), len(x[0])
    spec = naive_dft2(x)
    out_spec = [[0j] * w for _ in range(h)]
    for m in range(h):
        for n in range(w):
            re, im = spec[m][n].real, spec[m][n].imag
            amp = math.sqrt(re * re + im * im)
            ph = math.atan2(im, re)
            mo, no = offset(m, h), offset(n, w)
            ci, cj = mo + h // 2, no + w // 2
            eps = 1.0 + sigma(mo, no, h, w, alpha, k, beta) * z_centered[ci][cj]
            a = eps * amp
            out_spec[m][n] = complex(a * math.cos(ph), a * math.sin(ph))
    return [[v.real for v in row] for row in naive_idft2(out_spec)]


def footnote_band_stds(channels, boundaries, log_floor):
    """Per-band pstdev of log amplitudes pooled over channels, by hand.

    ``channels`` is a list of 2D lists. Band i holds b_i <= f < b_{i+1}
    with the last band closed at 1.
    """
    h, w = len(channels[0]), len(channels[0][0])
    n_bands = len(boundaries) - 1
    pools = [[] for _ in range(n_bands)]
    for ch in channels:
        spec = naive_dft2(ch)
        for m in range(h):
            for n in range(w):
                f = f_norm(offset(m, h), offset(n, w), h, w)
                band = n_bands - 1
                for i in range(n_bands):
                    if boundaries[i] <= f < boundaries[i + 1]:
                        band = i
                        break
                pools[band].append(math.log(max(abs(spec[m][n]), log_floor)))
    return [statistics.pstdev(p) if p else 0.0 for p in pools]
