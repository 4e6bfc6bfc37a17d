"""Structured verification records and their JSON / CSV / Markdown rendering."""
from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from .linalg import DenseMatrix
from .scalar import fmt


@dataclass
class Check:
    identity: str
    anchor: str
    params: dict
    N: int | None
    passed: bool
    max_residual: object
    elapsed_ms: float = 0.0
    note: str = ""

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def to_dict(self, timing=True):
        d = {
            "identity": self.identity,
            "anchor": self.anchor,
            "params": dict(sorted(self.params.items())),
            "N": self.N,
            "status": self.status,
            "max_residual": fmt(self.max_residual),
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
        }
        if self.note:
            d["note"] = self.note
        return d


def _flatten(residual):
    if isinstance(residual, DenseMatrix):
        return [a for r in residual.rows for a in r]
    if isinstance(residual, (list, tuple)):
        out = []
        for r in residual:
            out.extend(_flatten(r))
        return out
    return [residual]


def max_residual(residual):
    vals = _flatten(residual)
    best = 0
    for v in vals:
        if abs(v) > best:
            best = abs(v)
    return best


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def extend(self, other):
        self.checks.extend(other.checks if isinstance(other, VerificationReport) else other)
        return self

    def by_name(self, identity):
        return [c for c in self.checks if c.identity == identity]

    def residual(self, identity, anchor, residual, params=None, N=None, started=None, tol=None, note=""):
        """Record a residual check: pass iff every entry is exactly zero (or below ``tol``)."""
        m = max_residual(residual)
        if tol is None:
            ok = m == 0
        else:
            ok = m <= tol
        return self._add(identity, anchor, params, N, ok, m, started, note)

    def predicate(self, identity, anchor, ok, params=None, N=None, started=None, note=""):
        """Record a structural yes/no check; the residual column is 0 on pass, 1 on fail."""
        return self._add(identity, anchor, params, N, bool(ok), 0 if ok else 1, started, note)

    def _add(self, identity, anchor, params, N, ok, m, started, note):
        elapsed = (time.perf_counter() - started) * 1000 if started is not None else 0.0
        c = Check(identity, anchor, dict(params or {}), N, ok, m, elapsed, note)
        self.checks.append(c)
        return c

    # emission -----------------------------------------------------------
    def sorted_checks(self):
        return sorted(
            self.checks,
            key=lambda c: (c.identity, json.dumps(sorted(c.params.items())), c.N if c.N is not None else -1, c.note),
        )

    def to_json(self, timing=True):
        return json.dumps([c.to_dict(timing) for c in self.sorted_checks()], indent=2) + "\n"

    def to_csv(self, timing=True):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "anchor", "params", "N", "status", "max_residual", "elapsed_ms"])
        for c in self.sorted_checks():
            d = c.to_dict(timing)
            params = ";".join(f"{k}={v}" for k, v in d["params"].items())
            w.writerow([d["identity"], d["anchor"], params, d["N"], d["status"], d["max_residual"], d["elapsed_ms"]])
        return buf.getvalue()

    def to_markdown(self, timing=True):
        lines = ["| identity | params | N | status | residual |", "|---|---|---|---|---|"]
        for c in self.sorted_checks():
            d = c.to_dict(timing)
            params = ", ".join(f"{k}={v}" for k, v in d["params"].items())
            res = "" if c.passed and c.max_residual == 0 else d["max_residual"]
            lines.append(f"| {d['identity']} | {params} | {d['N']} | {d['status']} | {res} |")
        passed = sum(c.passed for c in self.checks)
        lines.append("")
        lines.append(f"{passed}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"

    def render(self, fmt_name, timing=True):
        if fmt_name == "json":
            return self.to_json(timing)
        if fmt_name == "csv":
            return self.to_csv(timing)
        if fmt_name in ("md", "markdown"):
            return self.to_markdown(timing)
        raise ValueError(f"unknown format {fmt_name!r}")
