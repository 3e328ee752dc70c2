"""Compare the compiled term-map kernels against the pure Python fallback.

Runs the same workloads twice in subprocesses, once with the default backend
and once with POLYZ_PURE=1, and prints a side-by-side table. The workloads
exercise the hot paths: dense polynomial products, fraction-free elimination,
and an end-to-end membership certificate.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time

import polyz
from polyz import Polynomial, PolyMatrix, ZZ, member_z
from polyz.linalg import bareiss_det


def rpoly(rng, nv, dmax, terms):
    items = []
    for _ in range(terms):
        e = tuple(rng.randint(0, dmax) for _ in range(nv))
        if sum(e) <= dmax:
            items.append((e, rng.randint(-9, 9)))
    return Polynomial.from_terms(ZZ, nv, items)


def bench_mul(rng):
    f = rpoly(rng, 3, 6, 40)
    g = rpoly(rng, 3, 6, 40)
    t0 = time.perf_counter()
    acc = f
    for _ in range(60):
        acc = f * g
        g = g + f
    return time.perf_counter() - t0


def bench_det(rng):
    rows = [[rpoly(rng, 2, 2, 4) for _ in range(5)] for _ in range(5)]
    A = PolyMatrix(ZZ, 2, rows)
    t0 = time.perf_counter()
    for _ in range(6):
        bareiss_det(A)
    return time.perf_counter() - t0


def bench_member(rng):
    x1 = Polynomial.var(ZZ, 2, 0)
    x2 = Polynomial.var(ZZ, 2, 1)
    one = Polynomial.one(ZZ, 2)
    fs = [x1 * x1 + x2, x2 * x2 - one, x1 * x2 + 3]
    f0 = (x1 * x1 + x2) * (x1 + 2) + (x2 * x2 - one) * x2
    t0 = time.perf_counter()
    cert = member_z(f0, fs)
    assert cert is not None and cert.verify()
    return time.perf_counter() - t0


def main():
    repeat = int(sys.argv[1])
    rng = random.Random(1234)
    out = {"backend": polyz.BACKEND, "times": {}}
    for name, fn in [("poly_mul", bench_mul), ("bareiss_det", bench_det), ("member_z", bench_member)]:
        best = min(fn(rng) for _ in range(repeat))
        out["times"][name] = best
    print(json.dumps(out))


main()
"""


def run_backend(pure, repeat):
    env = dict(os.environ)
    if pure:
        env["POLYZ_PURE"] = "1"
    else:
        env.pop("POLYZ_PURE", None)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)],
        capture_output=True,
        text=True,
        env=env,
    )
    if proc.returncode != 0:
        raise RuntimeError(proc.stderr)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of-N per workload")
    args = ap.parse_args()

    fast = run_backend(False, args.repeat)
    pure = run_backend(True, args.repeat)
    print(f"default backend: {fast['backend']}")
    print(f"pure backend:    {pure['backend']}")
    print()
    print(f"{'workload':<14} {'default (s)':>12} {'pure (s)':>12} {'speedup':>8}")
    for name in fast["times"]:
        a = fast["times"][name]
        b = pure["times"][name]
        ratio = b / a if a > 0 else float("inf")
        print(f"{name:<14} {a:>12.4f} {b:>12.4f} {ratio:>7.2f}x")


if __name__ == "__main__":
    main()
