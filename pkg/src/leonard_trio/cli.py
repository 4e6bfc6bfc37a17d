"""Command line: ``verify`` runs suites from a JSON config, ``table`` prints function values."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import battery as bat
from .errors import ConfigError, GenericityError, GenericityExhausted
from .params import ParameterSet
from .report import VerificationReport
from .scalar import Q, fmt

log = logging.getLogger("leonard_trio")

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_EXHAUSTED = 0, 1, 2, 3
FORMATS = ("json", "csv", "md")
TABLE_FUNCTIONS = ("qracah", "wilson", "w", "w-partner", "r1", "h1", "r3")


@dataclass
class RunConfig:
    mode: str = "exact"
    bits: int = 256
    parameter_sets: list = field(default_factory=list)
    battery: dict | None = None
    suites: list = field(default_factory=list)
    out: str | None = None
    format: str = "json"
    record_timing: bool = False
    workers: int = 4
    ladder: dict = field(default_factory=dict)


def parse_mode(text: str):
    text = text.strip()
    if text == "exact":
        return "exact", 256
    if text.startswith("float"):
        _, _, bits = text.partition(":")
        try:
            b = int(bits) if bits else 256
        except ValueError:
            raise ConfigError(f"bad precision in mode {text!r}") from None
        if b < 53:
            raise ConfigError("float mode needs at least 53 bits")
        return "float", b
    raise ConfigError(f"unknown mode {text!r}; expected exact or float:<bits>")


def _check_literal(v, where):
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise ConfigError(f"{where}: expected a rational string like \"3/5\", got {v!r}")
    try:
        Q(v) if isinstance(v, str) else None
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"{where}: {e}") from None


def load_config(doc: dict) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    cfg = RunConfig()
    cfg.mode, cfg.bits = parse_mode(str(doc.get("mode", "exact")))
    suites = doc.get("suites")
    if not suites:
        raise ConfigError("at least one suite is required")
    unknown = [s for s in suites if s not in bat.SUITES]
    if unknown:
        raise ConfigError(f"unknown suites {unknown}; choose from {list(bat.SUITES)}")
    cfg.suites = list(dict.fromkeys(suites))
    sets = doc.get("parameter_sets") or []
    for i, lit in enumerate(sets):
        for key in ("q", "alpha", "beta", "delta", "s"):
            if key not in lit:
                raise ConfigError(f"parameter_sets[{i}] lacks {key!r}")
            _check_literal(lit[key], f"parameter_sets[{i}].{key}")
        if not isinstance(lit.get("N"), int) or lit["N"] < 1:
            raise ConfigError(f"parameter_sets[{i}].N must be a positive integer")
    cfg.parameter_sets = sets
    b = doc.get("battery")
    if b is not None:
        if not isinstance(b, dict):
            raise ConfigError("battery must be an object")
        for i, v in enumerate(b.get("q_choices", ())):
            _check_literal(v, f"battery.q_choices[{i}]")
    cfg.battery = b
    if not sets and b is None and cfg.mode == "exact":
        raise ConfigError("give parameter_sets or a battery block")
    out = doc.get("output") or {}
    cfg.out = out.get("path")
    cfg.format = out.get("format", "json")
    if cfg.format == "markdown":
        cfg.format = "md"
    if cfg.format not in FORMATS:
        raise ConfigError(f"unknown format {cfg.format!r}")
    cfg.record_timing = bool(doc.get("record_timing", False))
    cfg.workers = int(doc.get("workers", 4))
    cfg.ladder = doc.get("ladder", {}) or {}
    for k, v in cfg.ladder.items():
        if k != "N":
            _check_literal(v, f"ladder.{k}")
    if cfg.mode == "float":
        no_ladder = [s for s in cfg.suites if s not in bat.LADDER_SUITES]
        if no_ladder:
            raise ConfigError(f"suites {no_ladder} have no float-mode check; float mode runs only "
                              f"{sorted(bat.LADDER_SUITES)}")
    return cfg


def parameter_sets_for(cfg: RunConfig):
    b = cfg.battery or {}
    seed = int(b.get("seed", 0))
    height = int(b.get("height", bat.DEFAULT_HEIGHT))
    K = int(b.get("max_resample", bat.DEFAULT_MAX_RESAMPLE))
    out, notes = [], []
    if cfg.parameter_sets:
        sets, notes = bat.resolve_explicit(cfg.parameter_sets, seed=seed, height=height, max_resample=K)
        out.extend(sets)
    if cfg.battery is not None:
        out.extend(bat.battery(
            seed=seed,
            count=int(b.get("count", 8)),
            q_choices=tuple(b.get("q_choices", bat.DEFAULT_Q_CHOICES)),
            N_choices=tuple(int(n) for n in b.get("N_choices", bat.DEFAULT_N_CHOICES)),
            height=height,
            max_resample=K,
        ))
    return out, notes


def run(cfg: RunConfig) -> tuple[int, VerificationReport]:
    rep = VerificationReport()
    if cfg.mode == "float":
        rep.extend(bat.run_ladder_suites(cfg.suites, bits=cfg.bits, base=cfg.ladder))
    else:
        sets, _ = parameter_sets_for(cfg)
        with ThreadPoolExecutor(max_workers=max(1, cfg.workers)) as pool:
            futures = [pool.submit(bat.run_suite, name, sets) for name in cfg.suites]
            for f in futures:
                rep.extend(f.result())
    return (EXIT_OK if rep.passed else EXIT_FAIL), rep


def _resolve_out(path: str | None, default_name: str) -> Path | None:
    report_dir = os.environ.get("REPORT_DIR")
    if path is None:
        return Path(report_dir) / default_name if report_dir else None
    p = Path(path)
    if report_dir and not p.is_absolute():
        p = Path(report_dir) / p
    return p


def _emit(text: str, path: Path | None):
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def default_config() -> dict:
    return json.loads(resources.files("leonard_trio").joinpath("data/default_config.json").read_text())


def cmd_verify(args) -> int:
    try:
        if args.config:
            try:
                doc = json.loads(Path(args.config).read_text())
            except OSError as e:
                raise ConfigError(f"cannot read config: {e}") from None
            except json.JSONDecodeError as e:
                raise ConfigError(f"config is not valid JSON: {e}") from None
        else:
            doc = default_config()
        if args.mode:
            doc["mode"] = args.mode
        if args.format:
            doc.setdefault("output", {})["format"] = args.format
        if args.out:
            doc.setdefault("output", {})["path"] = args.out
        cfg = load_config(doc)
        code, rep = run(cfg)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except GenericityExhausted as e:
        print(f"genericity exhausted: {e}", file=sys.stderr)
        return EXIT_EXHAUSTED
    _emit(rep.render(cfg.format, timing=cfg.record_timing), _resolve_out(cfg.out, f"report.{cfg.format}"))
    failed = rep.failures()
    print(f"{len(rep) - len(failed)}/{len(rep)} checks passed", file=sys.stderr)
    for c in failed:
        print(f"FAIL {c.identity} {c.params} residual={fmt(c.max_residual)}", file=sys.stderr)
    return code


# ---------------------------------------------------------------- table


def _table_values(fn: str, lit: dict, route: str):
    from .limits import R1Params, h1_eval, r1_eval, r1_sum_eval, r3_eval
    from .qaskey import qracah_eval
    from .trio import build_realization, overlap_w, overlap_w_partner
    from .wilson import trio_wilson_params, wilson_eval

    try:
        ps = ParameterSet(lit["q"], lit["alpha"], lit["beta"], lit["delta"], lit["s"], int(lit["N"]))
    except KeyError as e:
        raise ConfigError(f"params lacks {e}") from None
    except (ValueError, TypeError) as e:
        if isinstance(e, GenericityError):
            raise
        raise ConfigError(str(e)) from None
    N = ps.N
    if fn == "qracah":
        p = ps.qracah(ps.rho)
        f = lambda n, x: qracah_eval(p, n, x)  # noqa: E731
    elif fn == "wilson":
        wp = trio_wilson_params(ps)
        f = lambda n, x: wilson_eval(wp, n, x)  # noqa: E731
    elif fn in ("w", "w-partner"):
        tr = build_realization(ps)
        g = overlap_w if fn == "w" else overlap_w_partner
        f = lambda n, x: g(tr, n, x)  # noqa: E731
    elif fn == "r1":
        p = R1Params.from_trio(ps)
        g = r1_sum_eval if route == "sum" else r1_eval
        f = lambda n, x: g(p, n, x)  # noqa: E731
    elif fn == "h1":
        f = lambda n, x: h1_eval(ps.beta, ps.gamma, ps.delta, ps.q, n, x)  # noqa: E731
    elif fn == "r3":
        sigma = Q(lit["sigma"]) if "sigma" in lit else ps.sigma
        f = lambda n, x: r3_eval(sigma, ps.delta, ps.gamma, ps.q, n, x)  # noqa: E731
    else:
        raise ConfigError(f"unknown function {fn!r}")
    return [(n, x, f(n, x)) for n in range(N + 1) for x in range(N + 1)]


def render_table(rows, fmt_name="csv") -> str:
    if fmt_name == "json":
        return json.dumps([{"n": n, "x": x, "value": fmt(v)} for n, x, v in rows], indent=2) + "\n"
    if fmt_name == "md":
        return "\n".join(["| n | x | value |", "|---|---|---|"] + [f"| {n} | {x} | {fmt(v)} |" for n, x, v in rows]) + "\n"
    return "n,x,value\n" + "".join(f"{n},{x},{fmt(v)}\n" for n, x, v in rows)


def cmd_table(args) -> int:
    try:
        try:
            lit = json.loads(Path(args.params).read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read params: {e}") from None
        rows = _table_values(args.fn, lit, args.route)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except GenericityError as e:
        print(f"non-generic parameters: {e}", file=sys.stderr)
        return EXIT_CONFIG
    _emit(render_table(rows, args.format), _resolve_out(args.out, f"table-{args.fn}.{args.format}") if args.out else None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leonard-trio", description=__doc__)
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="cmd", required=True)
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--config", help="JSON run config (default: the bundled battery)")
    v.add_argument("--mode", help="exact | float:<bits>")
    v.add_argument("--out", help="output path (relative paths resolve under $REPORT_DIR)")
    v.add_argument("--format", choices=FORMATS)
    v.set_defaults(func=cmd_verify)
    t = sub.add_parser("table", help="tabulate a function family on the (n, x) grid")
    t.add_argument("--fn", required=True, choices=TABLE_FUNCTIONS)
    t.add_argument("--params", required=True, help="JSON object with q, alpha, beta, delta, s, N (and sigma for r3)")
    t.add_argument("--out")
    t.add_argument("--format", choices=FORMATS, default="csv")
    t.add_argument("--route", choices=("direct", "sum"), default="direct", help="r1 only: 4phi3 or dual q-Hahn sum")
    t.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
