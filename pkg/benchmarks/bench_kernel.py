"""Compare the compiled polynomial kernel against the pure-Python fallback.

Two views:
  * raw kernel ops (sparse products/sums on realistic operand shapes),
  * an end-to-end relation-suite workload run in a subprocess per backend
    (RSAFFINE_PURE=1 forces the fallback).

Usage: python benchmarks/bench_kernel.py [--json] [--skip-workload]
"""

import argparse
import json
import os
import subprocess
import sys
import time
from fractions import Fraction

from rsaffine import _pykernel

try:
    from rsaffine import _ckernel
except ImportError:
    _ckernel = None


def _operands():
    """Operand pair shaped like relation-suite entries: quantum integers
    times Laurent monomials in four variables."""
    def qint(n, shift):
        out = {}
        for j in range(n):
            key = (6 * (n - 1 - j) + shift[0], 6 * j + shift[1], shift[2], shift[3])
            out[key] = Fraction(1 + (j % 3), 1 + (j % 2))
        return out

    p = qint(9, (-6, 12, 2, 0))
    q = qint(7, (18, -6, -1, 1))
    return p, q


def bench_raw(kernel, repeats=4000):
    p, q = _operands()
    t0 = time.perf_counter()
    for _ in range(repeats):
        kernel.pmul(p, q)
    t_mul = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(repeats * 5):
        kernel.padd(p, q)
        kernel.psub(p, q)
    t_add = time.perf_counter() - t0
    return {"pmul_s": round(t_mul, 4), "padd_psub_s": round(t_add, 4)}


_WORKLOAD = (
    "import time; t0=time.perf_counter(); "
    "from rsaffine.sl2 import build_current_eval; "
    "from rsaffine.rep_core import check_drinfeld, all_pass; "
    "em = build_current_eval(2, True, kmax=3, lmax=3); "
    "assert all_pass(check_drinfeld(em.base, 3, 3)); "
    "print(round(time.perf_counter()-t0, 3))"
)


def bench_workload(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["RSAFFINE_PURE"] = "1"
    else:
        env.pop("RSAFFINE_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", _WORKLOAD], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip())


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--skip-workload", action="store_true")
    args = ap.parse_args(argv)

    doc = {"python": bench_raw(_pykernel)}
    if _ckernel is not None:
        doc["cython"] = bench_raw(_ckernel)
    if not args.skip_workload:
        doc["workload_python_s"] = bench_workload(pure=True)
        if _ckernel is not None:
            doc["workload_cython_s"] = bench_workload(pure=False)

    if args.json:
        print(json.dumps(doc, indent=1, sort_keys=True))
        return 0
    for backend in ("python", "cython"):
        if backend in doc:
            d = doc[backend]
            print(f"{backend:7s} raw: pmul {d['pmul_s']}s   padd/psub {d['padd_psub_s']}s")
    if "workload_python_s" in doc:
        print(f"workload (relation suite n=2): python {doc['workload_python_s']}s", end="")
        if "workload_cython_s" in doc:
            ratio = doc["workload_python_s"] / doc["workload_cython_s"]
            print(f", cython {doc['workload_cython_s']}s ({ratio:.2f}x)")
        else:
            print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
