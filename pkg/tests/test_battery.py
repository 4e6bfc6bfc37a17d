import random

import pytest

from leonard_trio.battery import (
    SUITES,
    battery,
    draw,
    resolve_explicit,
    run_ladder_suites,
    run_suite,
)
from leonard_trio.errors import GenericityExhausted
from leonard_trio.scalar import Q


def test_battery_deterministic():
    a = battery(seed=5, count=4)
    b = battery(seed=5, count=4)
    assert a == b
    assert a != battery(seed=6, count=4)


def test_battery_cycles_choices():
    sets = battery(seed=3, count=4, q_choices=("3/5", "2/7"), N_choices=(2, 3))
    assert [(s.q, s.N) for s in sets] == [(Q(3, 5), 2), (Q(2, 7), 2), (Q(3, 5), 3), (Q(2, 7), 3)]


def test_exhaustion():
    # height 1 only offers +-1, which always collide with some excluded factor
    with pytest.raises(GenericityExhausted):
        draw(random.Random(0), Q(3, 5), 3, height=1, max_resample=4)


def test_pole_plant_resampled():
    lit = {"q": "3/5", "alpha": "1/3", "beta": "1/7", "delta": "2", "s": "7/2", "N": 3}
    sets, notes = resolve_explicit([lit], seed=1)
    assert len(sets) == 1 and sets[0].s != Q(7, 2)
    assert "beta*delta*s" in notes[0]
    assert run_suite("r1", sets).passed


def test_generic_literal_kept():
    lit = {"q": "3/5", "alpha": "1/3", "beta": "1/7", "delta": "2", "s": "1/2", "N": 3}
    sets, notes = resolve_explicit([lit])
    assert notes == [] and sets[0].s == Q(1, 2)


@pytest.mark.parametrize("name", SUITES)
def test_each_suite_passes(name, small_battery):
    rep = run_suite(name, small_battery)
    assert len(rep) > 0
    assert rep.passed, [(c.identity, c.params) for c in rep.failures()]


def test_ladder_suite_selection():
    rep = run_ladder_suites(["r1"], bits=128)
    assert {c.identity for c in rep} == {"limit-alpha-to-0-r1", "limit-alpha-to-0-r1-difference"}
