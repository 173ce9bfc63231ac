"""Image decode/encode, dataset scanning and stats serialization."""
import csv
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import UnsupportedImageError
from .fourier import check_image
from .stats import BandStatsReport, BandStatsRow

log = logging.getLogger(__name__)

__all__ = [
    "IMAGE_EXTENSIONS",
    "ManifestEntry",
    "DatasetManifest",
    "load_image",
    "save_image",
    "quantize",
    "scan_dataset",
    "write_stats",
    "read_stats_csv",
    "write_svg_chart",
    "STATS_COLUMNS",
]

IMAGE_EXTENSIONS = ("png", "jpg", "jpeg")
STATS_COLUMNS = ("corpus", "n_bands", "band_index", "mean_log_amp_std", "n_images")
DELTA_COLUMNS = ("pre_mean_log_amp_std", "post_mean_log_amp_std", "delta_mean_log_amp_std")

# 8-bit modes we know how to map to 1 or 3 channels
_GRAY = {"L", "1"}
_GRAY_ALPHA = {"LA", "La"}
_RGB = {"RGB", "YCbCr", "CMYK", "P"}
_RGB_ALPHA = {"RGBA", "RGBa", "PA"}


def _pil_to_array(im, path):
    fmt = (im.format or "").upper()
    if fmt not in ("PNG", "JPEG", "MPO"):
        raise UnsupportedImageError(f"{path}: unsupported format {im.format!r}")
    mode = im.mode
    if mode in _GRAY:
        im = im.convert("L")
    elif mode in _GRAY_ALPHA:
        log.warning("%s: dropping alpha channel", path)
        im = im.convert("L")
    elif mode in _RGB:
        if mode == "P" and "transparency" in im.info:
            log.warning("%s: dropping palette transparency", path)
        im = im.convert("RGB")
    elif mode in _RGB_ALPHA:
        log.warning("%s: dropping alpha channel", path)
        im = im.convert("RGB")
    else:
        raise UnsupportedImageError(f"{path}: unsupported pixel mode {mode!r} (only 8-bit gray/RGB)")
    arr = np.asarray(im, dtype=np.uint8)
    if arr.ndim == 2:
        arr = arr[:, :, None]
    return arr


def _png_bit_depth(path):
    with open(path, "rb") as fh:
        head = fh.read(26)
    if head[:8] != b"\x89PNG\r\n\x1a\n" or len(head) < 26:
        return None
    return head[24]


def load_image(path):
    """Decode an 8-bit PNG/JPEG into an H x W x C float array in [0, 1]."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such image: {path}")
    depth = _png_bit_depth(path)
    # Pillow silently narrows 16-bit RGB PNGs to 8 bits, so check the header
    if depth is not None and depth > 8:
        raise UnsupportedImageError(f"{path}: {depth}-bit PNG is not supported (8-bit only)")
    try:
        with Image.open(path) as im:
            im.load()
            arr = _pil_to_array(im, path)
    except (UnsupportedImageError, FileNotFoundError):
        raise
    except (OSError, SyntaxError, ValueError) as exc:
        raise UnsupportedImageError(f"{path}: cannot decode ({exc})") from exc
    return arr.astype(np.float64) / 255.0


def quantize(image):
    """round(v * 255) with halves rounded up, after clamping to [0, 1]."""
    img = np.clip(check_image(image), 0.0, 1.0)
    return np.floor(img * 255.0 + 0.5).astype(np.uint8)


def save_image(path, image):
    """Write ``image`` as an 8-bit PNG, creating parent directories."""
    path = Path(path)
    data = quantize(image)
    path.parent.mkdir(parents=True, exist_ok=True)
    if data.shape[2] == 1:
        pil = Image.fromarray(data[:, :, 0], mode="L")
    else:
        pil = Image.fromarray(data, mode="RGB")
    pil.save(path, format="PNG")


@dataclass(frozen=True)
class ManifestEntry:
    relative_path: str  # posix separators
    width: int
    height: int
    channels: int


@dataclass(frozen=True)
class DatasetManifest:
    root: Path
    entries: tuple

    @property
    def count(self):
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def path(self, index):
        return self.root / self.entries[index].relative_path


def _probe(path):
    try:
        with Image.open(path) as im:
            w, h = im.size
            mode = im.mode
    except (OSError, SyntaxError) as exc:
        raise UnsupportedImageError(f"{path}: cannot decode ({exc})") from exc
    return w, h, (1 if mode in _GRAY | _GRAY_ALPHA else 3)


def scan_dataset(root, extensions=IMAGE_EXTENSIONS, probe=True):
    """Recursively list images under ``root``, sorted byte-wise by relative path."""
    root = Path(root)
    if not root.is_dir():
        raise NotADirectoryError(f"not a readable directory: {root}")
    exts = {e.lower().lstrip(".") for e in extensions}
    found = []
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for name in filenames:
            if name.rsplit(".", 1)[-1].lower() in exts and "." in name:
                found.append(Path(dirpath, name).relative_to(root).as_posix())
    found.sort(key=lambda p: p.encode("utf-8"))
    entries = []
    for rel in found:
        w, h, c = _probe(root / rel) if probe else (0, 0, 0)
        entries.append(ManifestEntry(rel, w, h, c))
    return DatasetManifest(root, tuple(entries))


# --- stats reports ----------------------------------------------------------


def _fmt(v):
    return f"{v:.9g}"


def _row_dict(row, with_deltas):
    d = {
        "corpus": row.corpus,
        "n_bands": row.n_bands,
        "band_index": row.band_index,
        "mean_log_amp_std": row.mean_log_amp_std,
        "n_images": row.n_images,
    }
    if with_deltas:
        d["pre_mean_log_amp_std"] = row.pre
        d["post_mean_log_amp_std"] = row.post
        d["delta_mean_log_amp_std"] = row.delta
    return d


def write_stats(path, report, format="csv"):
    if format not in ("csv", "json"):
        raise ValueError(f"unknown stats format {format!r}")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with_deltas = report.has_deltas
    rows = [_row_dict(r, with_deltas) for r in report.rows]
    if format == "json":
        for d in rows:
            for key, v in d.items():
                if isinstance(v, float):
                    d[key] = float(_fmt(v))
        path.write_text(json.dumps(rows, indent=2) + "\n")
        return
    columns = STATS_COLUMNS + (DELTA_COLUMNS if with_deltas else ())
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for d in rows:
            writer.writerow([_fmt(d[c]) if isinstance(d[c], float) else d[c] for c in columns])


def read_stats_csv(path):
    with Path(path).open(newline="") as fh:
        rows = []
        for rec in csv.DictReader(fh):
            extra = {}
            if "delta_mean_log_amp_std" in rec:
                extra = dict(
                    pre=float(rec["pre_mean_log_amp_std"]),
                    post=float(rec["post_mean_log_amp_std"]),
                    delta=float(rec["delta_mean_log_amp_std"]),
                )
            rows.append(
                BandStatsRow(
                    rec["corpus"],
                    int(rec["n_bands"]),
                    int(rec["band_index"]),
                    float(rec["mean_log_amp_std"]),
                    int(rec["n_images"]),
                    **extra,
                )
            )
    return BandStatsReport(tuple(rows))


_PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948")


def write_svg_chart(path, report, title="Log-amplitude std per frequency band"):
    """Grouped bar chart, one group per band.

    Bars within a group are the corpora in the report, or pre/post when the
    report carries deltas.
    """
    if report.has_deltas:
        series = [("pre", {r.band_index: r.pre for r in report.rows}), ("post", {r.band_index: r.post for r in report.rows})]
    else:
        series = []
        for r in report.rows:
            if not series or series[-1][0] != r.corpus:
                series.append((r.corpus, {}))
            series[-1][1][r.band_index] = r.mean_log_amp_std
    bands = sorted({r.band_index for r in report.rows})
    vmax = max((v for _, vals in series for v in vals.values()), default=1.0) or 1.0

    left, right, top, bottom = 60, 20, 40, 60
    width = max(480, left + right + len(bands) * max(60, 36 * len(series)))
    height = 360
    plot_w = width - left - right
    plot_h = height - top - bottom
    group_w = plot_w / max(1, len(bands))
    bar_w = group_w * 0.8 / max(1, len(series))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-family="sans-serif" font-size="14">{_esc(title)}</text>',
        f'<line x1="{left}" y1="{top + plot_h}" x2="{left + plot_w}" y2="{top + plot_h}" stroke="black"/>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + plot_h}" stroke="black"/>',
    ]
    for t in range(5):
        v = vmax * t / 4
        y = top + plot_h - plot_h * t / 4
        parts.append(
            f'<text x="{left - 6}" y="{y + 4:.1f}" text-anchor="end" font-family="sans-serif" font-size="10">{v:.3g}</text>'
        )
    for gi, band in enumerate(bands):
        gx = left + gi * group_w + group_w * 0.1
        for si, (name, vals) in enumerate(series):
            v = vals.get(band, 0.0)
            h = plot_h * v / vmax
            x = gx + si * bar_w
            parts.append(
                f'<rect x="{x:.1f}" y="{top + plot_h - h:.1f}" width="{bar_w:.1f}" height="{h:.1f}" '
                f'fill="{_PALETTE[si % len(_PALETTE)]}"><title>{_esc(name)} band {band}: {v:.6g}</title></rect>'
            )
        parts.append(
            f'<text x="{left + (gi + 0.5) * group_w:.1f}" y="{top + plot_h + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">band {band}</text>'
        )
    for si, (name, _) in enumerate(series):
        y = height - 18
        x = left + si * 120
        parts.append(f'<rect x="{x}" y="{y - 9}" width="10" height="10" fill="{_PALETTE[si % len(_PALETTE)]}"/>')
        parts.append(f'<text x="{x + 14}" y="{y}" font-family="sans-serif" font-size="11">{_esc(name)}</text>')
    parts.append("</svg>")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(parts) + "\n")


def _esc(s):
    return str(s).replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
