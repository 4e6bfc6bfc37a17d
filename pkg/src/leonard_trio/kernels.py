"""Kernel selection.

The compiled extension is used when it was built; otherwise the pure-Python
module is used.  Set ``LEONARD_TRIO_PURE=1`` to force the fallback.
"""
import os

if os.environ.get("LEONARD_TRIO_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

pochhammer = _impl.pochhammer
pochhammer_ladder = _impl.pochhammer_ladder
first_vanishing = _impl.first_vanishing
series_sum = _impl.series_sum
matmul = _impl.matmul

__all__ = [
    "BACKEND",
    "pochhammer",
    "pochhammer_ladder",
    "first_vanishing",
    "series_sum",
    "matmul",
]
