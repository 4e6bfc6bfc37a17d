import pytest

from leonard_trio import DenseMatrix, band_predicates, build_realization, overlap_w, overlap_w_partner
from leonard_trio.errors import NondegeneracyError
from leonard_trio.params import ParameterSet
from leonard_trio.trio import (
    generic_lp_from_family,
    qracah_lp_data,
    verify_biorthogonality,
    verify_constraint_equations,
    verify_gevp_from_matrices,
    verify_heun_relations,
    verify_lp_as_trio,
    verify_overlap_closed_forms,
    verify_partner_identity,
    verify_rationality_degree,
    verify_reordering,
    verify_summation_formula,
    verify_trio_axioms,
    verify_wilson_gevps,
)
from leonard_trio.scalar import Q

# w = Pvt^{-1} Pv computed independently with sympy on the same parameters
W00 = Q(7046154505, 1022329)
W2_AT_1 = Q(1019692848, 781)
WP00 = Q(10092730791, 3987842327)


def test_frozen_overlaps(tr3):
    assert overlap_w(tr3, 0, 0) == W00
    assert overlap_w(tr3, 2, 1) == W2_AT_1
    assert overlap_w_partner(tr3, 0, 0) == WP00


@pytest.mark.parametrize("verifier", [
    verify_trio_axioms, verify_reordering, verify_heun_relations, verify_biorthogonality,
    verify_partner_identity, verify_overlap_closed_forms, verify_gevp_from_matrices, verify_rationality_degree,
])
def test_realization_verifiers(tr3, verifier):
    rep = verifier(tr3)
    assert len(rep) > 0
    assert rep.passed, [c.identity for c in rep.failures()]


@pytest.mark.parametrize("verifier", [
    verify_lp_as_trio, verify_constraint_equations, verify_summation_formula, verify_wilson_gevps,
])
def test_parameter_verifiers(ps3, verifier):
    rep = verifier(ps3)
    assert rep.passed, [c.identity for c in rep.failures()]


def test_negative_probe_present(tr3):
    names = {c.identity for c in verify_trio_axioms(tr3)}
    assert "probe-Vt-not-tridiagonal-in-v" in names


def test_band_shapes_in_z_basis(tr3):
    assert band_predicates(tr3.Z)["multiplicity_free_diagonal"]
    assert band_predicates(tr3.V)["irreducible_tridiagonal"]
    assert not band_predicates(tr3.in_v(tr3.Vt))["tridiagonal"]


def test_dual_is_inverse(tr3):
    assert tr3.Dv == tr3.Pv.inverse().T


def test_generic_lp_matches_trio(ps3, tr3):
    d = qracah_lp_data(ps3)
    lp = generic_lp_from_family(d["rec"], d["diff"], d["Omega"], d["omega"], d["lam"], d["xi"])
    assert lp.V == tr3.V
    assert lp.P == tr3.Pv
    sigma = ps3.sigma
    assert lp.Z.shift(sigma) == tr3.Z
    assert lp.verify(d["lam"], d["diff"]).passed


def test_inverted_dual_ratio_is_not_dual(ps3):
    # omega_i P_i(n) / Omega_n, the ratio read the other way round, is not a dual basis
    d = qracah_lp_data(ps3)
    lp = generic_lp_from_family(d["rec"], d["diff"], d["Omega"], d["omega"], d["lam"], d["xi"])
    n1 = ps3.N + 1
    D = DenseMatrix([[d["omega"](i) * lp.P[i][n] / d["Omega"](n) for n in range(n1)] for i in range(n1)])
    assert not (D.T @ lp.P).is_identity()


def test_generic_lp_rejects_degenerate():
    one = Q(1)
    with pytest.raises(NondegeneracyError):
        generic_lp_from_family(lambda i: (0 * one, one, one), None, lambda n: one, lambda i: one,
                               [one, 2 * one], [one, 3 * one])


@pytest.mark.parametrize("N", [1, 2, 4])
def test_other_sizes(N):
    tr = build_realization(ParameterSet("2/7", "-1/2", "3/4", "5/3", "-3", N))
    assert verify_trio_axioms(tr).passed
    assert verify_biorthogonality(tr).passed
