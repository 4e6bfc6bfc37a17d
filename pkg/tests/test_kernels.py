import importlib
import os
import subprocess
import sys

import pytest

from leonard_trio import _kernels_py, kernels
from leonard_trio.scalar import Q

try:
    from leonard_trio import _kernels as _kernels_c
except ImportError:  # pragma: no cover
    _kernels_c = None

q = Q(3, 5)
CASES = [
    ("pochhammer", (Q(1, 3), q, 9)),
    ("pochhammer_ladder", (Q(-2, 7), q, 6)),
    ("first_vanishing", ([Q(1, 2), q**-2, Q(5)], q, 5)),
    ("first_vanishing", ([Q(1, 2), Q(5)], q, 5)),
    ("series_sum", ([q**-3, Q(1, 3), Q(2)], [Q(1, 7), Q(3, 2), q], q, q, 3)),
    ("series_sum", ([q**-3, Q(1, 3), Q(2)], [Q(1, 7), Q(3, 2), q], q, q, 3, Q(2, 9))),
    ("matmul", ([[Q(1), Q(0)], [Q(2, 3), Q(-1)]], [[Q(4), Q(1, 2)], [Q(0), Q(3)]])),
]


@pytest.mark.skipif(_kernels_c is None, reason="compiled kernel not built")
@pytest.mark.parametrize("name,args", CASES)
def test_backends_agree(name, args):
    assert getattr(_kernels_c, name)(*args) == getattr(_kernels_py, name)(*args)


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _kernels_c is not None and not os.environ.get("LEONARD_TRIO_PURE"):
        assert kernels.BACKEND == "cython"


def test_pure_env_forces_python():
    out = subprocess.run(
        [sys.executable, "-c", "from leonard_trio import kernels; print(kernels.BACKEND)"],
        env={**os.environ, "LEONARD_TRIO_PURE": "1"}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_first_vanishing_order():
    # j is scanned outermost, so the smallest exponent wins
    assert _kernels_py.first_vanishing([q**-3, q**-1], q, 5) == (1, 1)


def test_kernels_keep_rational_type():
    r = _kernels_py.pochhammer(Q(1, 3), q, 0)
    assert type(r) is type(q)
    assert importlib.import_module("leonard_trio.kernels").pochhammer(Q(1, 3), q, 0) == 1
