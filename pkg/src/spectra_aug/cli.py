"""Command line front end: ``spectra-aug {augment,stats,compare}``.

Exit codes: 0 success, 2 usage/config error, 3 I/O error, 4 empty dataset.
"""
import argparse
import logging
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np
from PIL import Image

from . import baselines
from .errors import EmptyDatasetError, SpectraAugError, UnsupportedImageError
from .io import load_image, save_image, scan_dataset, write_stats, write_svg_chart
from .pasta import pasta_image
from .rng import RngStream
from .sigma import PastaParams
from .stats import DEFAULT_LOG_FLOOR, BandSpec, compare_pre_post, corpus_band_stats

log = logging.getLogger("spectra_aug")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_EMPTY = 4

METHODS = ("pasta", "pasta-reversed", "aj", "am", "fda", "apr", "pd")
SEED_ENV = "SPECTRA_AUG_SEED"
_U64 = (1 << 64) - 1


class ConfigError(SpectraAugError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_dir: Path
    output_dir: Path = None
    method: str = "pasta"
    alpha: float = 3.0
    k: float = 2.0
    beta: float = 0.25
    lambda_min: float = 0.5
    lambda_max: float = 1.0
    band_fraction: float = 0.01
    n_bands: int = 3
    log_floor: float = DEFAULT_LOG_FLOOR
    seed: int = 0
    workers: int = 1
    style_dir: Path = None
    stats_format: str = "csv"
    emit_svg: bool = False

    @property
    def params(self):
        return PastaParams(self.alpha, self.k, self.beta)

    def validate(self):
        if self.method not in METHODS:
            raise ConfigError(f"unknown method {self.method!r}")
        if self.workers < 1:
            raise ConfigError("--workers must be >= 1")
        if not (0 <= self.seed <= _U64):
            raise ConfigError("--seed must be an unsigned 64-bit integer")
        if self.n_bands not in (1, 3, 5, 7, 9):
            raise ConfigError("--n-bands must be one of 1, 3, 5, 7, 9")
        if not self.log_floor > 0:
            raise ConfigError("--log-floor must be > 0")
        try:
            self.params
            baselines.MixupConfig(self.lambda_min, self.lambda_max)
            baselines.FdaConfig(self.band_fraction)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        if self.command == "augment":
            if self.output_dir is None:
                raise ConfigError("augment requires --output-dir")
            if Path(self.output_dir).resolve() == Path(self.input_dir).resolve():
                raise ConfigError("--output-dir must differ from --input-dir")
            if self.method == "fda" and self.style_dir is None:
                raise ConfigError("method fda requires --style-dir")
        if self.command == "compare" and self.method not in ("pasta", "pasta-reversed"):
            raise ConfigError("compare supports only --method pasta or pasta-reversed")
        if self.method in ("pasta", "pasta-reversed") and not (1.0 <= self.k <= 4.0):
            log.warning("k=%g is outside [1, 4]; large or tiny exponents tend to destroy image content", self.k)


# --- augment ----------------------------------------------------------------


@lru_cache(maxsize=32)
def _load_donor(path, height, width, channels):
    """Load a donor image converted to the source's mode and size."""
    with Image.open(path) as im:
        im = im.convert("L" if channels == 1 else "RGB")
        if im.size != (width, height):
            im = im.resize((width, height), Image.BILINEAR)
        arr = np.asarray(im, dtype=np.float64) / 255.0
    if arr.ndim == 2:
        arr = arr[:, :, None]
    arr.setflags(write=False)
    return arr


def _output_path(config, rel):
    return Path(config.output_dir) / Path(rel).with_suffix(".png")


def augment_one(config, image, index, donors=None):
    """Apply ``config.method`` to one image using stream ``(seed, index)``."""
    rng = RngStream(config.seed, index)
    method = config.method
    if method in ("pasta", "pasta-reversed"):
        return pasta_image(image, config.params, rng, reversed=method == "pasta-reversed")
    if method == "aj":
        return baselines.amplitude_jitter(image, config.beta, rng)
    if method == "pd":
        return baselines.photometric_distortion(image, rng)
    # donor is the first draw of the image's stream
    pick = int(rng.integers(len(donors)))
    h, w, c = image.shape
    donor = _load_donor(str(donors.path(pick)), h, w, c)
    if method == "am":
        return baselines.amplitude_mixup(image, donor, baselines.MixupConfig(config.lambda_min, config.lambda_max), rng)
    if method == "fda":
        return baselines.fda_swap(image, donor, baselines.FdaConfig(config.band_fraction))
    return baselines.apr_swap(image, donor)


def _map(config, fn, items):
    if config.workers == 1:
        return list(map(fn, items))
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(fn, items))


def _manifest(root):
    manifest = scan_dataset(root)
    if len(manifest) == 0:
        raise EmptyDatasetError(f"no png/jpg/jpeg images under {root}")
    return manifest


def run_augment(config):
    start = time.perf_counter()
    manifest = _manifest(config.input_dir)
    outputs = [_output_path(config, e.relative_path) for e in manifest]
    if len(set(outputs)) != len(outputs):
        raise ConfigError("two inputs map to the same output PNG (e.g. a.jpg and a.png in one folder)")
    donors = None
    if config.method in ("am", "fda", "apr"):
        donors = _manifest(config.style_dir) if config.style_dir is not None else manifest

    def work(i):
        image = load_image(manifest.path(i))
        save_image(outputs[i], augment_one(config, image, i, donors))

    _map(config, work, range(len(manifest)))
    elapsed = time.perf_counter() - start
    print(f"augmented {len(manifest)} images with {config.method} in {elapsed:.2f}s -> {config.output_dir}")
    return {"count": len(manifest), "elapsed": elapsed, "output_root": Path(config.output_dir)}


# --- stats / compare ---------------------------------------------------------


def _emit(config, report, stem):
    out = Path(config.output_dir or ".")
    path = out / f"{stem}.{config.stats_format}"
    write_stats(path, report, config.stats_format)
    written = [path]
    if config.emit_svg:
        svg = out / f"{stem}.svg"
        write_svg_chart(svg, report)
        written.append(svg)
    for p in written:
        print(f"wrote {p}")
    return written


def _corpus_label(config):
    return Path(config.input_dir).resolve().name or "corpus"


def run_stats(config):
    manifest = _manifest(config.input_dir)
    images = _map(config, load_image, [manifest.path(i) for i in range(len(manifest))])
    report = corpus_band_stats(images, BandSpec.equal(config.n_bands), config.log_floor, label=_corpus_label(config))
    _emit(config, report, "band_stats")
    return report


def run_compare(config):
    manifest = _manifest(config.input_dir)
    images = _map(config, load_image, [manifest.path(i) for i in range(len(manifest))])
    report = compare_pre_post(
        images,
        config.params,
        BandSpec.equal(config.n_bands),
        seed=config.seed,
        log_floor=config.log_floor,
        label=_corpus_label(config),
        reversed=config.method == "pasta-reversed",
    )
    _emit(config, report, "band_compare")
    return report


# --- argument parsing --------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input-dir", required=True, type=Path)
    common.add_argument("--output-dir", type=Path)
    common.add_argument("--method", choices=METHODS, default="pasta")
    common.add_argument("--alpha", type=float, default=3.0)
    common.add_argument("--k", type=float, default=2.0)
    common.add_argument("--beta", type=float, default=0.25)
    common.add_argument("--lambda-min", type=float, default=0.5)
    common.add_argument("--lambda-max", type=float, default=1.0)
    common.add_argument("--band-fraction", type=float, default=0.01)
    common.add_argument("--n-bands", type=int, choices=(1, 3, 5, 7, 9), default=3)
    common.add_argument("--log-floor", type=float, default=DEFAULT_LOG_FLOOR)
    common.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV}, then 0")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--style-dir", type=Path)
    common.add_argument("--stats-format", choices=("csv", "json"), default="csv")
    common.add_argument("--emit-svg", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="spectra-aug", description="Fourier-domain image augmentation and band statistics.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("augment", parents=[common], help="augment every image of a dataset")
    sub.add_parser("stats", parents=[common], help="per-band log-amplitude std of a corpus")
    sub.add_parser("compare", parents=[common], help="band statistics before and after PASTA")
    return parser


def _resolve_seed(arg):
    if arg is not None:
        return arg
    env = os.environ.get(SEED_ENV)
    if env is None or env.strip() == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise ConfigError(f"${SEED_ENV} must be an integer, got {env!r}") from None


def config_from_args(args):
    return RunConfig(
        command=args.command,
        input_dir=args.input_dir,
        output_dir=args.output_dir,
        method=args.method,
        alpha=args.alpha,
        k=args.k,
        beta=args.beta,
        lambda_min=args.lambda_min,
        lambda_max=args.lambda_max,
        band_fraction=args.band_fraction,
        n_bands=args.n_bands,
        log_floor=args.log_floor,
        seed=_resolve_seed(args.seed),
        workers=args.workers,
        style_dir=args.style_dir,
        stats_format=args.stats_format,
        emit_svg=args.emit_svg,
    )


RUNNERS = {"augment": run_augment, "stats": run_stats, "compare": run_compare}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        config = config_from_args(args)
        config.validate()
        RUNNERS[config.command](config)
    except EmptyDatasetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except (UnsupportedImageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
