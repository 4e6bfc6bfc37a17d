from fractions import Fraction

import mpmath
import pytest

from leonard_trio.errors import PoleError
from leonard_trio.qseries import (
    PhiSpec,
    PochhammerCache,
    phi,
    phi_reference,
    q_pochhammer,
    q_pochhammer_multi,
    spec_to_float,
    very_well_poised_phi,
    vwp_term_ratio,
    vwp_terms,
)
from leonard_trio.scalar import Q, float_precision, to_float

q = Q(3, 5)


def test_pochhammer_hand_values():
    assert q_pochhammer(Q(2), Q(3), 2) == 5
    assert q_pochhammer_multi([Q(2), Q(1, 2)], Q(3), 1) == Q(-1, 2)
    assert q_pochhammer(Q(7, 3), q, 0) == 1


def test_pochhammer_negative_length():
    with pytest.raises(ValueError):
        q_pochhammer(q, q, -1)


def test_pochhammer_cache_matches_direct():
    cache = PochhammerCache()
    a = Q(2, 9)
    for k in (3, 1, 7, 0, 12):
        assert cache(a, q, k) == q_pochhammer(a, q, k)
    assert len(cache) == 1


def test_2phi1_hand_sum():
    # (q^-2, 1/3; 1/7; q, q) summed by hand: 13/216
    assert phi(PhiSpec((q**-2, Q(1, 3)), (Q(1, 7),), q, q, 2)) == Q(13, 216)


def test_early_termination_equals_truncation():
    # q^-1 among the upper parameters kills every term past k = 1
    a, b = Q(2, 11), Q(5, 3)
    long = PhiSpec((q**-4, q**-1, a), (b, Q(7, 2)), q, q, 4)
    short = PhiSpec((q**-1, q**-4, a), (b, Q(7, 2)), q, q, 1)
    assert long.effective_length() == 1
    assert phi(long) == phi(short)


def test_upper_permutation_invariance():
    up = (q**-3, Q(1, 3), Q(4, 7), Q(-2, 5))
    lo = (Q(3, 11), Q(9, 2), Q(-1, 6))
    base = phi(PhiSpec(up, lo, q, q, 3))
    assert phi(PhiSpec((up[0], up[3], up[1], up[2]), (lo[2], lo[0], lo[1]), q, q, 3)) == base


def test_incremental_equals_reference():
    spec = PhiSpec((q**-5, Q(1, 3), Q(4, 7), Q(-2, 5)), (Q(3, 11), Q(9, 2), Q(-1, 6)), q, Q(2, 3), 5)
    assert phi(spec) == phi_reference(spec)


def test_pole_detected_with_position():
    spec = PhiSpec((q**-3, Q(1, 2)), (q**-1,), q, q, 3)
    with pytest.raises(PoleError) as e:
        phi(spec)
    assert e.value.index == 0 and e.value.k == 2


def test_shape_validation():
    with pytest.raises(ValueError):
        PhiSpec((q**-2, Q(1, 2), Q(1, 3)), (Q(1, 5),), q, q, 2)
    with pytest.raises(ValueError):
        PhiSpec((Q(1, 2), Q(1, 3)), (Q(1, 5),), q, q, 2)


def test_float_mode_matches_exact():
    spec = PhiSpec((q**-4, Q(1, 3), Q(4, 7)), (Q(3, 11), Q(9, 2)), q, q, 4)
    exact = phi(spec)
    with float_precision(200):
        approx = phi(spec_to_float(spec))
        assert abs(approx - to_float(exact)) < mpmath.mpf(2) ** -180


def test_vwp_square_root_fold():
    # the folded factor (1 - a q^{2k})/(1 - a) equals the sqrt-pair Pochhammer ratio
    a = Q(4, 9)
    r = Fraction(2, 3)  # sqrt(a)
    for k in range(5):
        pair = q_pochhammer(q * Q(r), q, k) * q_pochhammer(-q * Q(r), q, k) / (
            q_pochhammer(Q(r), q, k) * q_pochhammer(-Q(r), q, k))
        assert pair == (1 - a * q ** (2 * k)) / (1 - a)


def test_vwp_terms_and_ratio():
    a = Q(2, 7)
    tail = [Q(3, 5), Q(-1, 4), Q(5, 2), Q(1, 9), Q(7, 3)]
    n = 4
    t = vwp_terms(a, tail, q, n)
    for k in range(1, n + 1):
        assert t[k] / t[k - 1] == vwp_term_ratio(a, tail, q, n, k)
    assert very_well_poised_phi(a, tail, q, n) == sum(t, Q(0))


def test_vwp_pole():
    with pytest.raises(PoleError):
        very_well_poised_phi(Q(1), [Q(1, 2)], q, 2)
