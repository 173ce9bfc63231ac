"""Time the numba and numpy variants of each kernel, plus end-to-end PASTA.

    python benchmarks/bench_kernels.py [--size 512] [--repeat 20]

End-to-end timings use whichever backend the package selected at import
(``SPECTRA_AUG_NUMBA=0`` forces numpy); run the script twice to compare.
"""
import argparse
import time

import numpy as np

from spectra_aug import PAPER_DEFAULTS, RngStream, backend, kernels, pasta_image
from spectra_aug.stats import BandSpec, band_masks


def best_of(fn, repeat):
    fn()  # warm-up, includes JIT compilation
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=512)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    n = args.size
    rng = np.random.default_rng(0)
    amp = rng.random((n, n))
    phase = rng.uniform(-np.pi, np.pi, (n, n))
    logs = rng.standard_normal((3, n, n))
    labels = np.ascontiguousarray(band_masks(n, n, BandSpec.equal(9)).labels)
    rgb = rng.random((n, n, 3))

    cases = [
        ("sigma_grid", lambda f: f(n, n, 3.0, 2.0, 0.25, False), kernels.sigma_grid_loop, kernels.sigma_grid_numpy),
        ("polar_to_complex", lambda f: f(amp, phase), kernels.polar_to_complex_loop, kernels.polar_to_complex_numpy),
        ("band_pooled_std", lambda f: f(logs, labels, 9), kernels.band_pooled_std_loop, kernels.band_pooled_std_numpy),
        ("rgb_to_hsv", lambda f: f(rgb), kernels.rgb_to_hsv_loop, kernels.rgb_to_hsv_numpy),
        ("hsv_to_rgb", lambda f: f(rgb), kernels.hsv_to_rgb_loop, kernels.hsv_to_rgb_numpy),
    ]
    print(f"{'kernel':<18} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, call, fast, slow in cases:
        t_fast = best_of(lambda: call(fast), args.repeat)
        t_slow = best_of(lambda: call(slow), args.repeat)
        print(f"{name:<18} {t_fast * 1e3:>10.3f} {t_slow * 1e3:>10.3f} {t_slow / t_fast:>8.2f}")

    image = rng.random((n, n, 3))
    t = best_of(lambda: pasta_image(image, PAPER_DEFAULTS, RngStream(0, 0)), max(3, args.repeat // 4))
    print(f"pasta_image {n}x{n}x3 [{backend()}]: {t * 1e3:.2f} ms")


if __name__ == "__main__":
    main()
