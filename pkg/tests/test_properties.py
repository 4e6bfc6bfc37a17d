from fractions import Fraction

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from leonard_trio import ParameterSet, build_realization
from leonard_trio.errors import GenericityError
from leonard_trio.qaskey import qracah_duality_check, qracah_gram
from leonard_trio.qseries import PhiSpec, phi, phi_reference, q_pochhammer
from leonard_trio.scalar import Q
from leonard_trio.trio import verify_biorthogonality

rat = st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(lambda f: f != 0)
qs = st.sampled_from([Fraction(3, 5), Fraction(2, 7), Fraction(-1, 3), Fraction(5, 2)])


def _q(f):
    return Q(f.numerator, f.denominator)


@given(rat, qs, st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_splits(a, q, m, n):
    a, q = _q(a), _q(q)
    assert q_pochhammer(a, q, m + n) == q_pochhammer(a, q, m) * q_pochhammer(a * q**m, q, n)


@given(st.lists(rat, min_size=2, max_size=2), st.lists(rat, min_size=2, max_size=2), qs, rat, st.integers(0, 5))
def test_phi_routes_agree(up, lo, q, z, n):
    q = _q(q)
    spec = PhiSpec([q**-n] + [_q(u) for u in up], [_q(b) for b in lo], q, _q(z), n)
    try:
        expected = phi_reference(spec)
    except GenericityError:
        assume(False)
    assert phi(spec) == expected


def _ps(q, a, b, d, s, N):
    try:
        return ParameterSet(_q(q), _q(a), _q(b), _q(d), _q(s), N)
    except (GenericityError, ZeroDivisionError):
        assume(False)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(qs, rat, rat, rat, rat, st.integers(2, 3))
def test_gram_and_duality(q, a, b, d, s, N):
    ps = _ps(q, a, b, d, s, N)
    p = ps.qracah(ps.rho)
    G = qracah_gram(p)
    assert all(G[i][j] == (i == j) for i in range(N + 1) for j in range(N + 1))
    for n in range(N + 1):
        for x in range(N + 1):
            u, v = qracah_duality_check(p, n, x)
            assert u == v


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(qs, rat, rat, rat, rat, st.integers(2, 3))
def test_biorthogonality_random(q, a, b, d, s, N):
    ps = _ps(q, a, b, d, s, N)
    assert verify_biorthogonality(build_realization(ps)).passed
