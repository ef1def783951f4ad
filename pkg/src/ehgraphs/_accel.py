"""Numba switch.

Set ``EHGRAPHS_PURE_NUMPY=1`` to run every kernel through its pure-numpy
fallback instead of the ``@njit`` version.  The flag is read once, at import.
"""
import os

PURE_NUMPY = os.environ.get("EHGRAPHS_PURE_NUMPY", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if PURE_NUMPY:
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False
    _njit = None


def njit(*args, **kwargs):
    """``numba.njit`` when enabled, otherwise a no-op decorator."""
    if HAVE_NUMBA:
        return _njit(*args, **kwargs)
    if args and callable(args[0]):
        return args[0]
    return lambda fn: fn


def backend():
    return "numba" if HAVE_NUMBA else "numpy"
