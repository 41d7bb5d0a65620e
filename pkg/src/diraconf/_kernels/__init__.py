"""Kernel backend selection.

The compiled Cython kernel is preferred; the pure-Python fallback is used
when the extension is unavailable or when DIRACONF_PURE is set in the
environment (useful for benchmarking and cross-checking the two).
"""
import os
import warnings

BACKEND = "python"

if os.environ.get("DIRACONF_PURE"):
    from .fallback import rk4_linear2x2
else:
    try:
        from ._shoot import rk4_linear2x2
        BACKEND = "cython"
    except ImportError:  # extension not built
        from .fallback import rk4_linear2x2
        warnings.warn(
            "diraconf: compiled kernel unavailable, using the pure-Python "
            "fallback (expect much slower eigenvalue solves)",
            RuntimeWarning,
            stacklevel=2,
        )

__all__ = ["rk4_linear2x2", "BACKEND"]
