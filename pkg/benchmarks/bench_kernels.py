"""Compare the compiled and pure-Python ring kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the raw kernels on random inputs and one end-to-end workload
(the Lemma-3.5-style commutator grid), once per backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from jameshopf import _pykernels

try:
    from jameshopf import _kernels
except ImportError:
    _kernels = None


def _factors(rng, n, k, count):
    return [(tuple(rng.sample(range(1, n + 1), k)), rng.choice([-2, -1, 1, 2, 3])) for _ in range(count)]


def bench_kernel(mod, repeat):
    rng = random.Random(0)
    fs = _factors(rng, 10, 2, 14)
    a = mod.mul_unit_factors({(): 1}, fs[:7])
    b = mod.mul_unit_factors({(): 1}, fs[7:])
    t_units = min(timeit.repeat(lambda: mod.mul_unit_factors({(): 1}, fs), number=20, repeat=repeat)) / 20
    t_mul = min(timeit.repeat(lambda: mod.series_mul(a, b), number=20, repeat=repeat)) / 20
    return t_units, t_mul, len(a), len(b)


END_TO_END = """
import time
from jameshopf.report import SuiteConfig, run_check
t = time.perf_counter()
assert run_check("lemma35", SuiteConfig()).verdict
assert run_check("theorem38", SuiteConfig()).verdict
print(time.perf_counter() - t)
"""


def end_to_end(pure):
    env = dict(os.environ)
    env.pop("JAMESHOPF_PURE", None)
    if pure:
        env["JAMESHOPF_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    rows = {}
    for name, mod in backends:
        rows[name] = bench_kernel(mod, args.repeat)
        u, m, la, lb = rows[name]
        print(f"{name:>7}  unit-factor chain {u * 1e3:8.2f} ms   series_mul ({la}x{lb} terms) {m * 1e3:8.2f} ms")
    if "cython" in rows:
        pu, pm = rows["python"][:2]
        cu, cm = rows["cython"][:2]
        print(f"speedup  unit-factor chain {pu / cu:5.1f}x   series_mul {pm / cm:5.1f}x")

    if not args.skip_end_to_end:
        tp = end_to_end(pure=True)
        print(f"end-to-end (commutator grids)  python {tp:6.2f} s", end="")
        if _kernels is not None:
            tc = end_to_end(pure=False)
            print(f"   cython {tc:6.2f} s   speedup {tp / tc:4.1f}x")
        else:
            print()


if __name__ == "__main__":
    main()
