"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times the three kernels on generated words, plus one N=60 sweep per backend.
"""

import argparse
import random
import timeit

from mcfwords import kernels
from mcfwords.lattice import frequencies
from mcfwords.metrics import balance, discrepancy
from mcfwords.steps import Rule
from mcfwords.sweep import SweepConfig, run_sweep
from mcfwords.wordgen import generate_word


def workloads():
    rng = random.Random(1)
    words = []
    for _ in range(200):
        a, b = rng.randint(1, 150), rng.randint(1, 150)
        v = (a, b, 300 - a - b) if a + b < 300 else (a, b, 1)
        words.append((v, generate_word(v, Rule.BRUN).word))
    images = ((1, 3), (2,), (3, 1, 3))
    long_word = tuple(rng.randint(1, 3) for _ in range(100_000))
    return {
        "discrepancy x200": lambda: [discrepancy(w, frequencies(v)) for v, w in words],
        "balance x200": lambda: [balance(w, 3) for _, w in words],
        "apply 100k letters": lambda: kernels.apply_images(images, long_word),
        "sweep N=60, 3 configs": lambda: run_sweep(
            SweepConfig(N=60, algorithms=(Rule.BRUN, Rule.POINCARE, Rule.ARNOUX_RAUZY))),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    jobs = workloads()
    times = {}
    for b in backends:
        kernels.use_backend(b)
        for name, fn in jobs.items():
            times[b, name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    print(f"{'workload':24s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if "c" in backends else ""))
    for name in jobs:
        row = f"{name:24s}" + "".join(f"{times[b, name] * 1e3:10.2f}ms" for b in backends)
        if "c" in backends:
            row += f"{times['python', name] / times['c', name]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
