"""Compare the compiled and pure-Python kernels.

Times each kernel on the same inputs with both backends, then times an
end-to-end period scan in subprocesses with and without
DICKSON_DYN_PURE_PYTHON set.

    python3 benchmarks/bench_kernels.py --q 16 --repeat 5
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from dickson_dyn import _pykernels
from dickson_dyn.gf import field_of_order

try:
    from dickson_dyn import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def kernel_cases(q: int, seed: int):
    F = field_of_order(q)
    add, mul, neg = F.add_table, F.mul_table, F.neg_table
    rng = random.Random(seed)
    a = tuple(rng.randrange(q) for _ in range(q))
    b = tuple(rng.randrange(q) for _ in range(q))
    smap = _pykernels.shift_map(q, 1)
    vals = _pykernels.eval_table(a, q, add, mul)
    return {
        "linrec": lambda k: k.linrec(a, b, smap, 0, 1, q * q, q, add, mul, neg),
        "eval_table": lambda k: k.eval_table(a, q, add, mul),
        "interpolate": lambda k: k.interpolate(vals, q, add, mul, neg),
        "polymul_reduced": lambda k: k.polymul_reduced(a, b, q, add, mul),
    }


def time_call(fn, repeat: int) -> float:
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def end_to_end(qmax: int, pure: bool) -> float:
    env = dict(os.environ)
    env["DICKSON_DYN_PURE_PYTHON"] = "1" if pure else "0"
    code = (
        "import time; from dickson_dyn.periodicity import scan_periods; "
        f"t = time.perf_counter(); scan_periods({qmax}); print(time.perf_counter() - t)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--q", type=int, default=16, help="field order for the kernel timings")
    parser.add_argument("--qmax", type=int, default=32, help="bound for the end-to-end period scan")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels not built; only the pure-Python backend is available")
        return

    print(f"kernel timings, q = {args.q} (seconds per call)")
    print(f"{'kernel':<18}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, call in kernel_cases(args.q, args.seed).items():
        py = time_call(lambda: call(_pykernels), args.repeat)
        cy = time_call(lambda: call(_ckernels), args.repeat)
        print(f"{name:<18}{py:>12.2e}{cy:>12.2e}{py / cy:>9.1f}x")

    py = end_to_end(args.qmax, pure=True)
    cy = end_to_end(args.qmax, pure=False)
    print(f"\nscan_periods({args.qmax}): python {py:.3f}s, cython {cy:.3f}s, speedup {py / cy:.1f}x")


if __name__ == "__main__":
    main()
