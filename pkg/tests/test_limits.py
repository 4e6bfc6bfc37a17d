import pytest

from leonard_trio.errors import GenericityError
from leonard_trio.limits import (
    R1Params,
    ReducedSequences,
    build_reduced_lp,
    h1_eval,
    h1_eval_and_residuals,
    h1_nondiagonalizability,
    limit_ladders,
    r1_difference_residual,
    r1_eval,
    r1_recurrence_residual,
    r1_sum_eval,
    r3_eval,
    racah_relation_residual,
    reduced_compatibility_check,
    run_ladder,
)
from leonard_trio.scalar import Q

q = Q(3, 5)


def _grid(N):
    return [(n, x) for n in range(N + 1) for x in range(N + 1)]


def test_racah_relation(ps3):
    assert all(racah_relation_residual(ps3, n, x) == 0 for n, x in _grid(3))


def test_r1_routes_and_relations(ps3):
    p = R1Params.from_trio(ps3)
    for n, x in _grid(3):
        assert r1_eval(p, n, x) == r1_sum_eval(p, n, x)
        assert r1_recurrence_residual(p, n, x) == 0
        assert r1_difference_residual(p, n, x) == 0
    assert all(r1_eval(p, 0, x) == 1 for x in range(4))


def test_r1_pole_plant_is_named():
    # beta delta s = q^{x-1} at x = 1
    with pytest.raises(GenericityError) as e:
        R1Params(Q(1, 7), Q(2), Q(7, 2), q, 3)
    assert "beta*delta*s" in e.value.factor


def test_h1_relations(ps3):
    for n, x in _grid(3):
        v, rec, dif = h1_eval_and_residuals(ps3.beta, ps3.gamma, ps3.delta, q, n, x)
        assert rec == 0 and dif == 0
    assert h1_eval(ps3.beta, ps3.gamma, ps3.delta, q, 0, 2) == 1


@pytest.mark.parametrize("N", [2, 3, 4])
def test_h1_not_diagonalizable(N):
    ev = h1_nondiagonalizability(Q(1, 7), Q(2), q, N)
    assert ev["irreducible_lower_bidiagonal"]
    assert ev["spectrum"] == [-1]
    assert ev["rank_Z_plus_I"] == N
    assert not ev["diagonalizable"]


def test_r3_first_row(ps3):
    assert all(r3_eval(ps3.sigma, ps3.delta, ps3.gamma, q, 0, x) == 1 for x in range(4))


def test_classifier_cases():
    N = 4
    qred = ReducedSequences([Q(1, 2) + Q(3) * q**x for x in range(N + 1)], [Q(2) - q ** (-x) for x in range(N + 1)])
    lred = ReducedSequences([Q(1, 3) + 2 * x for x in range(N + 1)], [Q(5) - Q(1, 2) * x for x in range(N + 1)])
    mixed = ReducedSequences([q**x for x in range(N + 1)], [Q(x) for x in range(N + 1)])
    assert reduced_compatibility_check(qred) == {"compatible": True, "form": "q-red"}
    assert reduced_compatibility_check(lred) == {"compatible": True, "form": "l-red"}
    assert reduced_compatibility_check(mixed)["compatible"] is False


def test_reduced_sequences_need_distinct_entries():
    with pytest.raises(ValueError):
        ReducedSequences([Q(1), Q(1)], [Q(1), Q(2)])


def test_reduced_lp(ps3):
    lp, rep = build_reduced_lp(ps3.alpha, ps3.gamma, ps3.delta, q, 3)
    assert rep.passed, [c.identity for c in rep.failures()]
    assert lp.P[3][0] == 0


def test_reduced_lp_requires_truncation():
    with pytest.raises(GenericityError):
        build_reduced_lp(Q(1, 3), Q(5), Q(2), q, 3)


def test_run_ladder_linear_error():
    r = run_ladder("linear", lambda t: 3 * t)
    assert r.passed and abs(r.min_ratio - 10) < 1e-9
    flat = run_ladder("flat", lambda t: t**0 / 100)
    assert not flat.passed


def test_limit_ladders_converge():
    res = limit_ladders(N=2, bits=192)
    assert [r.name for r in res] == [
        "limit-s-to-0-racah", "limit-alpha-to-0-r1", "limit-alpha-to-0-r1-difference",
        "limit-alpha-to-0-r3", "limit-beta-to-0-r",
    ]
    for r in res:
        assert r.passed, (r.name, r.errors)
