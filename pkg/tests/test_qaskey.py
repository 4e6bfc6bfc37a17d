import pytest

from leonard_trio.errors import GenericityError
from leonard_trio.qaskey import (
    QRacahParams,
    dual_qhahn_eval,
    qracah_ABC,
    qracah_closure,
    qracah_difference_residual,
    qracah_duality_check,
    qracah_eval,
    qracah_gram,
    qracah_recurrence_residual,
    r_limit_eval,
)
from leonard_trio.scalar import Q

# values from an independent Fraction-based evaluation of the 4phi3
ORACLE = {(1, 1): Q(3184, 1421), (2, 3): Q(280872, 50083), (3, 2): Q(199309892, 11268675)}


@pytest.fixture
def p(ps3):
    return ps3.qracah(ps3.rho)


def test_frozen_values(p):
    for (n, x), v in ORACLE.items():
        assert qracah_eval(p, n, x) == v


def test_trivial_rows(p):
    assert all(qracah_eval(p, 0, x) == 1 for x in range(p.N + 1))
    assert all(qracah_eval(p, n, 0) == 1 for n in range(p.N + 1))


def test_truncation_detected(p):
    assert p.truncation == "gamma"
    assert p.dual().truncation == "alpha"


def test_no_truncation_is_rejected():
    with pytest.raises(GenericityError):
        QRacahParams(Q(1, 3), Q(1, 7), Q(5), Q(2), Q(3, 5), 3)


def test_A_N_vanishes(p):
    assert qracah_ABC(p, p.N)[0] == 0
    assert qracah_ABC(p, 0)[2] == 0


def test_gram_and_closure_identity(p):
    n1 = p.N + 1
    I = [[int(i == j) for j in range(n1)] for i in range(n1)]
    assert qracah_gram(p) == I
    assert qracah_closure(p) == I


def test_recurrence_difference_duality(p):
    for n in range(p.N + 1):
        for x in range(p.N + 1):
            assert qracah_recurrence_residual(p, n, x) == 0
            assert qracah_difference_residual(p, n, x) == 0
            a, b = qracah_duality_check(p, n, x)
            assert a == b


def test_index_range(p):
    with pytest.raises(IndexError):
        qracah_eval(p, p.N + 1, 0)


def test_dual_qhahn_trivial():
    q = Q(3, 5)
    assert dual_qhahn_eval(Q(1, 2), Q(2), q**-4, q, 0, 2) == 1


def test_r_limit_vanishes_above_diagonal():
    q = Q(3, 5)
    g = q**-4
    for x in range(4):
        for n in range(x + 1, 4):
            assert r_limit_eval(Q(1, 3), g, Q(2), q, n, x) == 0
