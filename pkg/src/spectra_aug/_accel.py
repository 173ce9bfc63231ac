"""Backend switch for the per-cell kernels.

Set ``SPECTRA_AUG_NUMBA=0`` to force the pure-numpy path. The flag is read
once at import time.
"""
import os

_FALSEY = {"0", "false", "no", "off"}

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("SPECTRA_AUG_NUMBA", "1").strip().lower() not in _FALSEY


def njit(fn):
    """Compile ``fn`` in nopython mode if numba is importable, else return it unchanged."""
    if not HAVE_NUMBA:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


def backend():
    return "numba" if USE_NUMBA else "numpy"
