"""Exit criteria.  Each prints one PASS/FAIL line with its wall time and budget.

Run alone with ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
"""
import time

import pytest

from leonard_trio import battery as bat
from leonard_trio import build_realization
from leonard_trio.cli import default_config, load_config, parameter_sets_for
from leonard_trio.qaskey import qracah_gram
from leonard_trio.report import VerificationReport
from leonard_trio.trio import (
    verify_biorthogonality,
    verify_constraint_equations,
    verify_heun_relations,
    verify_overlap_closed_forms,
    verify_summation_formula,
)

pytestmark = pytest.mark.acceptance

_SETS = {}


def default_sets():
    if "default" not in _SETS:
        _SETS["default"] = parameter_sets_for(load_config(default_config()))[0]
    return _SETS["default"]


def seeded(count, N_choices, seed=1):
    key = (count, N_choices, seed)
    if key not in _SETS:
        _SETS[key] = bat.battery(seed=seed, count=count, N_choices=N_choices)
    return _SETS[key]


def _all(reports, names=None):
    rep = VerificationReport()
    for r in reports:
        rep.extend(r)
    if names is not None:
        seen = {c.identity for c in rep}
        missing = set(names) - seen
        if missing:
            return False, f"missing checks {sorted(missing)}"
    failed = rep.failures()
    return not failed, f"{len(rep) - len(failed)}/{len(rep)} checks"


def c1_orthogonality():
    sets = seeded(20, (2, 3, 4, 5))
    ok = True
    for ps in sets:
        G = qracah_gram(ps.qracah(ps.rho))
        ok &= all(G[i][j] == (i == j) for i in range(ps.N + 1) for j in range(ps.N + 1))
    return ok and sorted({ps.N for ps in sets}) == [2, 3, 4, 5], f"{len(sets)} Gram matrices"


def c2_trio_axioms():
    return _all((bat.suite_trio_axioms(ps) for ps in default_sets()), ["probe-Vt-not-tridiagonal-in-v"])


def c3_heun():
    names = ["heun-VtZ", "heun-ZV", "heun-shifted-ZVt", "heun-shifted-VZ"]
    return _all((verify_heun_relations(build_realization(ps)) for ps in default_sets()), names)


def c4_constraints():
    names = ["constraint-root-sets", "recursion-conditions"]
    return _all((verify_constraint_equations(ps) for ps in default_sets()), names)


def c5_summation():
    sets = seeded(10, (2, 3, 4))
    return _all((verify_summation_formula(ps) for ps in sets), ["summation-formula"])


def c6_biorthogonality():
    return _all((verify_biorthogonality(build_realization(ps)) for ps in default_sets()),
                ["biorthogonality", "closure"])


def c7_gevps():
    names = ["gevp-recurrence-assembled", "gevp-difference-assembled", "gevp-generic-closed-form",
             "wilson-gevp-trio-variables", "wilson-gevp-general", "wilson-gevp-coefficients"]
    return _all((bat.suite_gevp(ps) for ps in default_sets()), names)


def c8_w00():
    rep = VerificationReport()
    for ps in default_sets():
        rep.extend(c for c in verify_overlap_closed_forms(build_realization(ps)) if c.identity == "overlap-w00")
    return rep.passed and len(rep) == len(default_sets()), f"{len(rep)} instances"


def c9_racah_relation():
    return _all((bat.suite_racah_relation(ps) for ps in seeded(10, (2, 3))), ["racah-relation"])


def c10_r1_h1():
    names = ["r1-two-routes", "r1-recurrence", "r1-difference", "r1-difference-two-term", "h1-recurrence",
             "h1-difference", "h1-z-not-diagonalizable"]
    sets = default_sets()
    return _all([bat.suite_r1(ps) for ps in sets] + [bat.suite_h1(ps) for ps in sets], names)


def c11_reduced():
    names = ["reduced-classifier", "reduced-lp-V-eigen", "reduced-lp-Z-action", "r-vanishes-above-diagonal"]
    return _all((bat.suite_reduced(ps) for ps in default_sets()), names)


def c12_ladders():
    rep = bat.run_ladder_suites(bat.SUITES, bits=256)
    want = {"limit-s-to-0-racah", "limit-alpha-to-0-r1", "limit-alpha-to-0-r3", "limit-beta-to-0-r"}
    if not want <= {c.identity for c in rep}:
        return False, "ladder missing"
    return rep.passed, ", ".join(f"{c.identity}: {c.note}" for c in rep.sorted_checks())


CRITERIA = [
    (1, "q-Racah orthogonality, 20 sets, N 2..5", c1_orthogonality, 10),
    (2, "trio axiom suite with negative probe", c2_trio_axioms, 10),
    (3, "four Heun relations", c3_heun, 20),
    (4, "constraint equations, root sets, recursion conditions", c4_constraints, 10),
    (5, "summation formula, 10 sets, N 2..4", c5_summation, 60),
    (6, "biorthogonality of overlap matrices", c6_biorthogonality, 5),
    (7, "both GEVPs and coefficient consistency", c7_gevps, 30),
    (8, "w_0(0) closed form", c8_w00, 1),
    (9, "Racah relation, 10 sets, N 2..3", c9_racah_relation, 30),
    (10, "R1 routes and relations, H1 relations and non-diagonalizability", c10_r1_h1, 30),
    (11, "reduced classifier and reduced LP", c11_reduced, 10),
    (12, "float limit ladders at 256 bits", c12_ladders, 60),
]


def run_criterion(num, title, fn, budget):
    default_sets()  # sampling is shared setup, not part of any criterion's time
    t0 = time.perf_counter()
    ok, detail = fn()
    secs = time.perf_counter() - t0
    passed = bool(ok) and secs < budget
    line = f"{'PASS' if passed else 'FAIL'} criterion {num:2d}: {title} [{secs:.2f}s < {budget}s] {detail}"
    return passed, line


@pytest.mark.parametrize("num,title,fn,budget", CRITERIA, ids=[f"criterion-{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, title, fn, budget, capsys):
    passed, line = run_criterion(num, title, fn, budget)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    import sys

    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
