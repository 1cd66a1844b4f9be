"""Time the state-sum histogram: numba kernel vs the pure-numpy fallback.

    python3 benchmarks/bench_state_sum.py [--max-crossings 16] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from vbraid import _kernels
from vbraid.gauss import close_braid
from vbraid.invariants import smoothing_tables
from vbraid.words import BraidWord, sigma, v


def word_with_crossings(c: int, seed: int = 0) -> BraidWord:
    rng = np.random.default_rng(seed)
    n = 4
    letters = []
    while sum(1 for g in letters if not g.is_virtual) < c:
        i = int(rng.integers(1, n))
        letters.append(v(i) if rng.random() < 0.3 else sigma(i, int(rng.choice((1, -1)))))
    return BraidWord(n, tuple(letters))


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    # warm the JIT so compile time is not counted
    g = close_braid(word_with_crossings(2))
    _kernels.state_histogram(*smoothing_tables(g)[:3], use_numba=True)

    print(f"{'crossings':>9} {'states':>8} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for c in range(4, args.max_crossings + 1, 2):
        n_arcs, a, b, _ = smoothing_tables(close_braid(word_with_crossings(c, seed=c)))
        fast = best_of(lambda: _kernels.state_histogram(n_arcs, a, b, use_numba=True), args.repeat)
        slow = best_of(lambda: _kernels.state_histogram(n_arcs, a, b, use_numba=False), args.repeat)
        same = np.array_equal(_kernels.state_histogram(n_arcs, a, b, use_numba=True),
                              _kernels.state_histogram(n_arcs, a, b, use_numba=False))
        print(f"{c:>9} {1 << c:>8} {fast * 1e3:>10.2f} {slow * 1e3:>10.2f} {slow / fast:>7.1f}x"
              + ("" if same else "  MISMATCH"))


if __name__ == "__main__":
    main()
