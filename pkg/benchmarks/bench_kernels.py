#!/usr/bin/env python3
"""Benchmark the compiled convolution kernel against the pure-Python fallback.

Microbenchmarks import both kernel modules side by side; the end-to-end rows
re-run representative identity checks in subprocesses with QHALL_KERNEL
forcing each backend.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from qhall.kernels import _pykernels

try:
    from qhall.kernels import _ckernels
except ImportError:
    _ckernels = None

END_TO_END = [
    ("rr.a2 N=60", "from qhall.identities import verify_rr_a2; verify_rr_a2(60)"),
    (
        "euler.a2 grid M<=5",
        "from qhall.identities import verify_euler_A2\n"
        "for m1 in range(6):\n"
        "    for m2 in range(6):\n"
        "        verify_euler_A2(m1, m2, 'standard')",
    ),
    (
        "family.3n n=3 N=40",
        "from qhall.identities import verify_modulus_family; "
        "verify_modulus_family(3, '3n', 40)",
    ),
    (
        "pid.main n=3 m=2 D=5",
        "from qhall.identities import verify_main; verify_main(3, 2, 5)",
    ),
]


def bench_conv(mod, a, b, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        mod.conv(a, b)
        best = min(best, time.perf_counter() - t0)
    return best


def micro(repeat):
    rng = random.Random(1)
    print(f"{'convolution':<28}{'python':>12}{'cython':>12}{'speedup':>9}")
    for size, mag in [(64, 10**3), (128, 10**6), (256, 10**6), (512, 10**9), (256, 10**40)]:
        a = [rng.randint(-mag, mag) for _ in range(size)]
        b = [rng.randint(-mag, mag) for _ in range(size)]
        tp = bench_conv(_pykernels, a, b, repeat)
        row = f"{f'n={size} |coeff|~1e{len(str(mag))-1}':<28}{tp*1e3:>10.2f}ms"
        if _ckernels is not None:
            tc = bench_conv(_ckernels, a, b, repeat)
            row += f"{tc*1e3:>10.2f}ms{tp/tc:>8.1f}x"
        else:
            row += f"{'n/a':>12}{'':>9}"
        print(row)


def end_to_end(repeat):
    print()
    print(f"{'identity check':<28}{'python':>12}{'cython':>12}{'speedup':>9}")
    for label, code in END_TO_END:
        times = {}
        for backend in ("python", "cython"):
            if backend == "cython" and _ckernels is None:
                continue
            env = dict(os.environ, QHALL_KERNEL=backend)
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                subprocess.run(
                    [sys.executable, "-c", code], env=env, check=True
                )
                best = min(best, time.perf_counter() - t0)
            times[backend] = best
        row = f"{label:<28}{times['python']*1e3:>10.0f}ms"
        if "cython" in times:
            row += (
                f"{times['cython']*1e3:>10.0f}ms"
                f"{times['python']/times['cython']:>8.1f}x"
            )
        print(row)
    print("\n(end-to-end rows include ~100ms interpreter startup per run)")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernel not built; showing pure-Python numbers only\n")
    micro(args.repeat)
    end_to_end(args.repeat)


if __name__ == "__main__":
    main()
