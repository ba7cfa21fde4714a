"""Compare the compiled kernel against the pure-Python twin.

Times the crossing-table build and the full factorization on the same
random tangles.  Run from the repository root after building the extension
in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_backends.py
"""

from __future__ import annotations

import random
import time

from brauer import random_tangle
from brauer._kernels import pure
from brauer.factorize import factor_indices

try:
    from brauer._kernels import _speedups
except ImportError:
    _speedups = None


def best_of(runs: int, fn, *args) -> float:
    times = []
    for _ in range(runs):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    rng = random.Random(2024)
    sizes = [16, 32, 64, 128]
    backends = [("pure", pure)] + ([("cython", _speedups)] if _speedups else [])
    if _speedups is None:
        print("compiled kernel not built; timing the pure backend only")

    print(f"{'N':>5} {'kernel':>8} {'counts (ms)':>12} {'factorize (ms)':>15} {'word':>6}")
    for n in sizes:
        x = random_tangle(n, rng)
        indices = factor_indices(x)
        for name, impl in backends:
            t_counts = best_of(3, impl.crossing_counts, n, list(x.pairing))
            t_fact = best_of(3, impl.factorize_core, n, list(x.pairing), indices, False, False)
            word_len = len(impl.factorize_core(n, list(x.pairing), indices, False, False))
            print(
                f"{n:>5} {name:>8} {t_counts * 1e3:>12.2f} {t_fact * 1e3:>15.2f} {word_len:>6}"
            )


if __name__ == "__main__":
    main()
