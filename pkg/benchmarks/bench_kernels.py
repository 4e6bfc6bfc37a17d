"""Compare the compiled and pure-Python kernels on the workloads the verifiers hit.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Each workload runs once per backend on identical inputs; results are checked
for equality before timings are printed.
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import timeit

from leonard_trio import _kernels_py
from leonard_trio.scalar import Q

try:
    from leonard_trio import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _workloads():
    q = Q("3/5")
    a, b, c, d = Q("1/3"), Q("2/7"), Q("5/11"), Q("7/13")
    upper = [q**-12, a * b * q**11, q**-5, c]
    lower = [a * q, b * d * q, c * d * q, q]
    mat = [[Q(i * 7 + j + 1, j + 2) for j in range(12)] for i in range(12)]
    vwp_up = [a * q, -a * q, b, c, d, q**-9, a * q**10, a * b, a * c]
    vwp_lo = [a / b * q, a / c * q, a / d * q, q**10, q**-9 / a, q / b, q / c, a * q / (a * b), q]
    return {
        "pochhammer k=200": lambda k: k.pochhammer(a, q, 200),
        "pochhammer_ladder k=200": lambda k: k.pochhammer_ladder(a, q, 200),
        "series_sum 4phi3 n=12": lambda k: k.series_sum(upper, lower, q, q, 12),
        "series_sum vwp n=9": lambda k: k.series_sum(vwp_up, vwp_lo, q, q, 9, vwp=a),
        "matmul 12x12": lambda k: k.matmul(mat, mat),
        "first_vanishing miss": lambda k: k.first_vanishing([a, b, c, d], q, 64),
    }


def _end_to_end(pure: bool, repeat: int) -> float:
    env = dict(os.environ)
    env.pop("LEONARD_TRIO_PURE", None)
    if pure:
        env["LEONARD_TRIO_PURE"] = "1"
    code = (
        "import timeit\n"
        "from leonard_trio import battery, kernels\n"
        "sets = battery.battery(seed=7, count=4)\n"
        "f = lambda: [battery.run_suite(s, sets) for s in ('trio-axioms', 'heun', 'summation')]\n"
        f"print(kernels.BACKEND, min(timeit.repeat(f, number=1, repeat={repeat})))\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True, capture_output=True, text=True)
    backend, secs = out.stdout.split()
    return backend, float(secs)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", help="write results here")
    ap.add_argument("--skip-suites", action="store_true", help="kernel micro-benchmarks only")
    args = ap.parse_args(argv)

    if _kernels_c is None:
        print("compiled kernel not built; only the Python backend is available", file=sys.stderr)
    results = []
    print(f"{'workload':28s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, fn in _workloads().items():
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=20, repeat=args.repeat)) / 20
        row = {"workload": name, "python_ms": t_py * 1e3}
        if _kernels_c is not None:
            if fn(_kernels_c) != fn(_kernels_py):
                raise SystemExit(f"{name}: backends disagree")
            t_c = min(timeit.repeat(lambda: fn(_kernels_c), number=20, repeat=args.repeat)) / 20
            row.update(cython_ms=t_c * 1e3, speedup=t_py / t_c)
            print(f"{name:28s} {t_py * 1e3:10.3f} {t_c * 1e3:10.3f} {t_py / t_c:7.2f}x")
        else:
            print(f"{name:28s} {t_py * 1e3:10.3f} {'-':>10s} {'-':>8s}")
        results.append(row)

    if not args.skip_suites:
        reps = max(1, min(args.repeat, 3))
        _, t_py = _end_to_end(True, reps)
        backend, t_c = _end_to_end(False, reps)
        row = {"workload": "suites trio-axioms+heun+summation", "python_ms": t_py * 1e3}
        if backend == "cython":
            row.update(cython_ms=t_c * 1e3, speedup=t_py / t_c)
            print(f"{'suites (4 sets)':28s} {t_py * 1e3:10.1f} {t_c * 1e3:10.1f} {t_py / t_c:7.2f}x")
        results.append(row)

    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2)


if __name__ == "__main__":
    main()
