import pytest

from leonard_trio.errors import GenericityError
from leonard_trio.scalar import Q
from leonard_trio.wilson import (
    WilsonParams,
    trio_wilson_gevp_residual,
    trio_wilson_params,
    wilson_difference_residual,
    wilson_eval,
    wilson_gevp_residual,
)

# independent Fraction-based evaluation of the very-well-poised 10phi9
ORACLE = {(1, 2): Q(152097373, 182828800), (2, 2): Q(74597953576939, 94621321625600), (3, 0): Q(1)}


def test_frozen_values(ps3):
    wp = trio_wilson_params(ps3)
    for (n, x), v in ORACLE.items():
        assert wilson_eval(wp, n, x) == v


def test_balancing_enforced():
    with pytest.raises(GenericityError):
        WilsonParams(Q(1, 3), Q(2), Q(5), Q(7), Q(11), Q(3, 5), 2)


def test_first_row_is_one(ps3):
    wp = trio_wilson_params(ps3)
    assert all(wilson_eval(wp, 0, x) == 1 for x in range(4))


def test_gevp_and_difference(ps3):
    wp = trio_wilson_params(ps3)
    for n in range(4):
        for x in range(4):
            assert wilson_gevp_residual(wp, n, x) == 0
            assert wilson_difference_residual(wp, n, x) == 0
            assert trio_wilson_gevp_residual(ps3, n, x) == 0


def test_bc_swap_is_index_duality(ps3):
    # swapping b and c permutes the upper parameters together with n <-> x
    wp = trio_wilson_params(ps3)
    sw = wp.swap_bc()
    for n in range(4):
        for x in range(4):
            assert wilson_eval(wp, n, x) == wilson_eval(sw, x, n)
