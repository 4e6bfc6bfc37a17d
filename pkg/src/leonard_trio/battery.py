"""Seeded parameter batteries and the named verification suites."""
from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import GenericityError, GenericityExhausted
from .limits import (
    R1Params,
    build_reduced_lp,
    h1_eval_and_residuals,
    h1_nondiagonalizability,
    ladders_report,
    limit_ladders,
    r1_difference_coeffs,
    r1_difference_residual,
    r1_eval,
    r1_recurrence_residual,
    r1_sum_eval,
    r3_eval,
    racah_relation_residual,
    reduced_compatibility_check,
    ReducedSequences,
)
from .linalg import DenseMatrix, band_predicates
from .params import ParameterSet
from .qaskey import (
    qracah_closure,
    qracah_difference_residual,
    qracah_duality_check,
    qracah_gram,
    qracah_recurrence_residual,
)
from .qseries import PhiSpec, phi, phi_reference
from .report import VerificationReport
from .scalar import Q
from .trio import (
    build_realization,
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
from .wilson import trio_wilson_params, wilson_difference_residual, wilson_eval

log = logging.getLogger(__name__)

DEFAULT_Q_CHOICES = ("3/5", "2/7")
DEFAULT_N_CHOICES = (2, 3, 4, 5)
DEFAULT_HEIGHT = 9
DEFAULT_MAX_RESAMPLE = 32

SUITES = (
    "qaskey", "wilson", "trio-axioms", "heun", "gevp", "summation", "biorthogonality",
    "racah-relation", "r1", "h1", "r3", "reduced",
)
LADDER_SUITES = {
    "racah-relation": ("limit-s-to-0-racah",),
    "r1": ("limit-alpha-to-0-r1", "limit-alpha-to-0-r1-difference"),
    "r3": ("limit-alpha-to-0-r3",),
    "reduced": ("limit-beta-to-0-r",),
}


# ---------------------------------------------------------------- sampling


def random_rational(rng: random.Random, height: int, nonzero=True):
    """p/q with 1 <= |p|, q <= height, in lowest terms."""
    while True:
        p = rng.randint(-height, height)
        d = rng.randint(1, height)
        if nonzero and p == 0:
            continue
        f = Fraction(p, d)
        return Q(f.numerator, f.denominator)


def validate(ps: ParameterSet) -> ParameterSet:
    """Genericity beyond the trio itself: the s -> 1/(alpha beta s) partner and the R1 limit."""
    ps.check_generic()
    ps.replace(s=1 / (ps.alpha * ps.beta * ps.s)).check_generic()
    R1Params.from_trio(ps).check_generic()
    return ps


@dataclass
class Sample:
    ps: ParameterSet
    attempts: int
    rejected: list


def draw(rng: random.Random, q, N, height, max_resample=DEFAULT_MAX_RESAMPLE) -> Sample:
    rejected = []
    for attempt in range(1, max_resample + 1):
        a, b, d, s = (random_rational(rng, height) for _ in range(4))
        try:
            ps = validate(ParameterSet(q, a, b, d, s, N, check=False))
            return Sample(ps, attempt, rejected)
        except (GenericityError, ZeroDivisionError) as e:
            rejected.append(str(e))
            log.debug("resampling (q=%s, N=%s): %s", q, N, e)
    raise GenericityExhausted(f"no generic parameter set after {max_resample} draws (q={q}, N={N})")


def battery(seed=0, count=8, q_choices=DEFAULT_Q_CHOICES, N_choices=DEFAULT_N_CHOICES, height=DEFAULT_HEIGHT,
            max_resample=DEFAULT_MAX_RESAMPLE) -> list:
    """``count`` generic ParameterSets; instance k uses q and N cycled from the choice lists."""
    rng = random.Random(seed)
    qs = [Q(v) for v in q_choices]
    out = []
    for k in range(count):
        q = qs[k % len(qs)]
        N = N_choices[(k // len(qs)) % len(N_choices)]
        out.append(draw(rng, q, N, height, max_resample).ps)
    return out


def resolve_explicit(literals, seed=0, height=DEFAULT_HEIGHT, max_resample=DEFAULT_MAX_RESAMPLE):
    """Parse explicit parameter literals; non-generic entries are logged and replaced by a seeded draw."""
    rng = random.Random(seed)
    out, notes = [], []
    for lit in literals:
        try:
            ps = validate(ParameterSet(lit["q"], lit["alpha"], lit["beta"], lit["delta"], lit["s"], int(lit["N"]),
                                       check=False))
        except (GenericityError, ZeroDivisionError) as e:
            msg = f"parameter set {lit} rejected: {e}; resampling"
            log.warning(msg)
            notes.append(msg)
            ps = draw(rng, Q(lit["q"]), int(lit["N"]), height, max_resample).ps
        out.append(ps)
    return out, notes


# ---------------------------------------------------------------- suites


def _grid(N):
    return [(n, x) for n in range(N + 1) for x in range(N + 1)]


def suite_qaskey(ps: ParameterSet) -> VerificationReport:
    rep = VerificationReport()
    P, N = ps.as_strings(), ps.N
    for label, rho in (("rho", ps.rho), ("rhoT", ps.rhoT)):
        p = ps.qracah(rho)
        one = p.q**0
        I = [[one if i == j else 0 * one for j in range(N + 1)] for i in range(N + 1)]
        t0 = time.perf_counter()
        G = qracah_gram(p)
        rep.residual(f"qracah-orthogonality-{label}", "sum_x Omega_x(rho') R_m R_n = delta_mn/(M Omega_n)",
                     [[G[i][j] - I[i][j] for j in range(N + 1)] for i in range(N + 1)], P, N, t0)
        t0 = time.perf_counter()
        K = qracah_closure(p)
        rep.residual(f"qracah-closure-{label}", "sum_n M Omega_n R_n(x) R_n(y) Omega_x(rho') = delta_xy",
                     [[K[i][j] - I[i][j] for j in range(N + 1)] for i in range(N + 1)], P, N, t0)
        t0 = time.perf_counter()
        rep.residual(f"qracah-recurrence-{label}", "lambda(x; gamma delta) R_n = A_n R_{n+1} + B_n R_n + C_n R_{n-1}",
                     [qracah_recurrence_residual(p, n, x) for n, x in _grid(N)], P, N, t0)
        t0 = time.perf_counter()
        rep.residual(f"qracah-difference-{label}", "difference equation in x via rho' coefficients",
                     [qracah_difference_residual(p, n, x) for n, x in _grid(N)], P, N, t0)
        t0 = time.perf_counter()
        rep.residual(f"qracah-duality-{label}", "R_n(x; rho) = R_x(n; rho')",
                     [u - v for u, v in (qracah_duality_check(p, n, x) for n, x in _grid(N))], P, N, t0)
    return rep


def suite_wilson(ps: ParameterSet) -> VerificationReport:
    rep = verify_wilson_gevps(ps)
    P, N = ps.as_strings(), ps.N
    wp = trio_wilson_params(ps)
    t0 = time.perf_counter()
    rep.residual("wilson-difference", "difference GEVP of W_n(x) by b <-> c transport",
                 [wilson_difference_residual(wp, n, x) for n, x in _grid(N)], P, N, t0)
    t0 = time.perf_counter()
    sw = wp.swap_bc()
    rep.residual("wilson-duality", "W_n(x; a, b, c) = W_x(n; a, c, b)",
                 [wilson_eval(wp, n, x) - wilson_eval(sw, x, n) for n, x in _grid(N)], P, N, t0)
    return rep


def suite_trio_axioms(ps: ParameterSet) -> VerificationReport:
    tr = build_realization(ps)
    rep = verify_trio_axioms(tr)
    rep.extend(verify_reordering(tr))
    rep.extend(verify_lp_as_trio(ps))
    d = qracah_lp_data(ps)
    lp = generic_lp_from_family(d["rec"], d["diff"], d["Omega"], d["omega"], d["lam"], d["xi"])
    sub = lp.verify(d["lam"], d["diff"])
    t0 = time.perf_counter()
    sub.predicate("generic-lp-matches-trio", "generic construction gives V_z and Z_z - sigma I",
                  lp.V == tr.V and lp.Z.shift(ps.sigma) == tr.Z and lp.P == tr.Pv, started=t0)
    for c in sub:
        c.params, c.N = ps.as_strings(), ps.N
    return rep.extend(sub)


def suite_heun(ps):
    tr = build_realization(ps)
    return verify_heun_relations(tr).extend(verify_constraint_equations(ps))


def suite_gevp(ps):
    tr = build_realization(ps)
    return verify_gevp_from_matrices(tr).extend(verify_wilson_gevps(ps))


def suite_summation(ps):
    tr = build_realization(ps)
    rep = verify_summation_formula(ps)
    rep.extend(verify_overlap_closed_forms(tr))
    return rep.extend(verify_rationality_degree(tr))


def suite_biorthogonality(ps):
    tr = build_realization(ps)
    return verify_biorthogonality(tr).extend(verify_partner_identity(tr))


def suite_racah_relation(ps):
    rep = VerificationReport()
    t0 = time.perf_counter()
    rep.residual("racah-relation", "R_n(x; rho1) = prefactor * sum_i c_i R_i(x; rhoT) R_i(n; rho)",
                 [racah_relation_residual(ps, n, x) for n, x in _grid(ps.N)], ps.as_strings(), ps.N, t0)
    return rep


def suite_r1(ps):
    rep = VerificationReport()
    P, N = ps.as_strings(), ps.N
    p = R1Params.from_trio(ps)
    t0 = time.perf_counter()
    rep.residual("r1-two-routes", "4phi3 form equals the dual q-Hahn sum",
                 [r1_eval(p, n, x) - r1_sum_eval(p, n, x) for n, x in _grid(N)], P, N, t0)
    t0 = time.perf_counter()
    rep.residual("r1-recurrence", "three-term GEVP in n with spectral factor q^{-x} - 1",
                 [r1_recurrence_residual(p, n, x) for n, x in _grid(N)], P, N, t0)
    t0 = time.perf_counter()
    rep.residual("r1-difference", "difference relation with spectral factor (1-q^n)(q^{-n} - gamma delta q)",
                 [r1_difference_residual(p, n, x) for n, x in _grid(N)], P, N, t0)
    Zt = DenseMatrix.zeros(N + 1, zero=0 * ps.q)
    for x in range(N + 1):
        Z0, Zm = r1_difference_coeffs(p, x)[:2]
        Zt.rows[x][x] = Z0
        if x > 0:
            Zt.rows[x][x - 1] = Zm
    rep.predicate("r1-difference-two-term", "spectral side of the difference relation is irreducible lower bidiagonal",
                  band_predicates(Zt)["irreducible_lower_bidiagonal"], P, N)
    return rep


def suite_h1(ps):
    rep = VerificationReport()
    P, N = ps.as_strings(), ps.N
    b, g, d, q = ps.beta, ps.gamma, ps.delta, ps.q
    t0 = time.perf_counter()
    vals = [h1_eval_and_residuals(b, g, d, q, n, x, N) for n, x in _grid(N)]
    rep.residual("h1-recurrence", "three-term GEVP of H1 in n", [v[1] for v in vals], P, N, t0)
    rep.residual("h1-difference", "two-term-spectral difference relation of H1 in x", [v[2] for v in vals], P, N, t0)
    rep.predicate("h1-first-row", "H1_0(x) = 1", all(v[0] == 1 for (n, x), v in zip(_grid(N), vals) if n == 0),
                  P, N)
    ev = h1_nondiagonalizability(b, d, q, N)
    rep.predicate("h1-z-not-diagonalizable",
                  "spectral matrix lower bidiagonal, sole eigenvalue -1, rank(Z + I) > 0",
                  ev["irreducible_lower_bidiagonal"] and ev["spectrum"] == [-1] and ev["rank_Z_plus_I"] > 0,
                  P, N, note=f"rank(Z+I)={ev['rank_Z_plus_I']}")
    return rep


def r3_sigma(ps):
    """R3 parameter used by the exact suite: the trio sigma."""
    return ps.sigma


def suite_r3(ps):
    rep = VerificationReport()
    P, N = ps.as_strings(), ps.N
    sg, d, g, q = r3_sigma(ps), ps.delta, ps.gamma, ps.q
    t0 = time.perf_counter()
    res = []
    for n, x in _grid(N):
        spec = PhiSpec((q ** (-n), g * d * q ** (n + 1), sg * q, sg * d * q),
                       (g * sg * q ** (x + 2), sg * d * q ** (1 - x), d * q), q, q, n)
        res.append(phi(spec) - phi_reference(spec))
    rep.residual("r3-series-two-routes", "balanced 4phi3 of R3: incremental vs term-by-term", res, P, N, t0)
    rep.predicate("r3-first-row", "R3_0(x) = 1", all(r3_eval(sg, d, g, q, 0, x) == 1 for x in range(N + 1)), P, N)
    return rep


def _reduced_sequences(ps):
    q, N = ps.q, ps.N
    a0, a1, a3, a4 = ps.alpha, ps.beta, ps.delta, ps.s
    yield "q-red", ReducedSequences([a0 + a1 * q**x for x in range(N + 1)], [a3 + a4 * q ** (-x) for x in range(N + 1)]), True
    yield "q-red", ReducedSequences([q ** (-x) for x in range(N + 1)],
                                    [ps.gamma * ps.delta * q ** (x + 1) for x in range(N + 1)]), True
    yield "l-red", ReducedSequences([a0 + a1 * x for x in range(N + 1)], [a3 + a4 * x for x in range(N + 1)]), True
    yield "other", ReducedSequences([q ** (-x) + q**x for x in range(N + 1)], list(range(N + 1))), False
    yield "other", ReducedSequences([(-1) ** x * (x + 1) for x in range(N + 1)], [a0 + a1 * x for x in range(N + 1)]), False


def suite_reduced(ps):
    rep = VerificationReport()
    P, N = ps.as_strings(), ps.N
    t0 = time.perf_counter()
    ok = True
    for form, seqs, compatible in _reduced_sequences(ps):
        if seqs.N < 2:
            continue
        out = reduced_compatibility_check(seqs)
        ok &= out["compatible"] == compatible and (out["form"] == form or not compatible)
    rep.predicate("reduced-classifier", "compatibility relation accepts q-red / l-red and rejects mixed forms",
                  ok, P, N, t0)
    _, sub = build_reduced_lp(ps.alpha, ps.gamma, ps.delta, ps.q, N)
    for c in sub:
        c.params = P
    return rep.extend(sub)


SUITE_FUNCS = {
    "qaskey": suite_qaskey,
    "wilson": suite_wilson,
    "trio-axioms": suite_trio_axioms,
    "heun": suite_heun,
    "gevp": suite_gevp,
    "summation": suite_summation,
    "biorthogonality": suite_biorthogonality,
    "racah-relation": suite_racah_relation,
    "r1": suite_r1,
    "h1": suite_h1,
    "r3": suite_r3,
    "reduced": suite_reduced,
}


def run_suite(name: str, parameter_sets) -> VerificationReport:
    rep = VerificationReport()
    fn = SUITE_FUNCS[name]
    for ps in parameter_sets:
        rep.extend(fn(ps))
    return rep


def run_ladder_suites(names, bits=256, base=None) -> VerificationReport:
    """Float-mode limit ladders for the requested suites."""
    base = dict(base or {})
    results = limit_ladders(bits=bits, **base)
    wanted = {n for s in names for n in LADDER_SUITES.get(s, ())}
    params = {k: str(v) for k, v in base.items()} or {"q": "3/5", "alpha": "1/3", "beta": "1/7", "delta": "2",
                                                       "s": "1/2", "sigma": "2/3"}
    params["bits"] = str(bits)
    return ladders_report([r for r in results if r.name in wanted], params)
