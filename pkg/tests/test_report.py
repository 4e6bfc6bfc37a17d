import json

from leonard_trio.linalg import DenseMatrix
from leonard_trio.report import VerificationReport, max_residual
from leonard_trio.scalar import Q


def _rep():
    rep = VerificationReport()
    rep.residual("b-id", "anchor", [Q(0), Q(0)], {"q": "3/5"}, 2)
    rep.residual("a-id", "anchor", DenseMatrix([[Q(0), Q(-1, 3)]]), {"q": "3/5"}, 2)
    rep.predicate("c-id", "shape", True, {"q": "3/5"}, 2)
    return rep


def test_pass_requires_exact_zero():
    rep = _rep()
    assert not rep.passed
    assert [c.identity for c in rep.failures()] == ["a-id"]
    assert max_residual([[Q(1, 2)], [Q(-2)]]) == 2


def test_json_sorted_and_timing_free():
    d = json.loads(_rep().to_json(timing=False))
    assert [c["identity"] for c in d] == ["a-id", "b-id", "c-id"]
    assert d[0]["max_residual"] == "1/3"
    assert all(c["elapsed_ms"] == 0 for c in d)


def test_csv_columns():
    head = _rep().to_csv().splitlines()[0]
    assert head == "identity,anchor,params,N,status,max_residual,elapsed_ms"


def test_markdown_hides_zero_residuals():
    md = _rep().to_markdown()
    assert "| b-id | q=3/5 | 2 | pass |  |" in md
    assert "| a-id | q=3/5 | 2 | fail | 1/3 |" in md
    assert md.rstrip().endswith("2/3 checks passed")


def test_predicate_residual_is_zero_or_one():
    rep = VerificationReport()
    assert rep.predicate("x", "", True).max_residual == 0
    assert rep.predicate("y", "", False).max_residual == 1
