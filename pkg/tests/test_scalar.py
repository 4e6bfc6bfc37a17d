import os
import subprocess
import sys

import pytest

from leonard_trio.scalar import Q, fmt


def test_literal_parsing():
    assert Q("3/5") == Q(3, 5)
    assert Q(" -4 ") == -4
    assert fmt(Q(6, 4)) == "3/2"
    assert fmt(Q(5)) == "5"


@pytest.mark.parametrize("bad", ["3/0", "0.6", "x", "1/2/3"])
def test_bad_literals(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        Q(bad)


def test_fraction_backend_gives_same_table(tmp_path):
    lit = tmp_path / "p.json"
    lit.write_text('{"q": "3/5", "alpha": "1/3", "beta": "1/7", "delta": "2", "s": "1/2", "N": 2}')
    outs = []
    for extra in ({}, {"LEONARD_TRIO_SCALAR": "fraction", "LEONARD_TRIO_PURE": "1"}):
        env = {**os.environ, **extra}
        r = subprocess.run([sys.executable, "-m", "leonard_trio", "table", "--fn", "w", "--params", str(lit)],
                           env=env, capture_output=True, text=True, check=True)
        outs.append(r.stdout)
    assert outs[0] == outs[1]
