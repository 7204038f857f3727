"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3] [--rank 5]

The first numba call per kernel includes compilation (or a cache load), so it
is done once before timing.
"""

import argparse
import time

import numpy as np

from lusztig_cones import _accel
from lusztig_cones.cone import spanning_vectors
from lusztig_cones.crystal.operators import standard_index
from lusztig_cones.weyl import ReducedWord, standard_word


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def _first(out):
    return out[0] if isinstance(out, tuple) else out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--rank", type=int, default=5)
    ap.add_argument("--batch", type=int, default=2000)
    args = ap.parse_args()
    n = args.rank

    words = _accel.reduced_words_array(n, "numba")
    w = ReducedWord(n, tuple(words[len(words) // 2].tolist()))
    basis = np.array([sv.coords for sv in spanning_vectors(w)], dtype=np.int64)
    rng = np.random.default_rng(0)
    A = rng.integers(0, 4, size=(args.batch, basis.shape[0])) @ basis
    idx = standard_index(n)
    letters = np.asarray(w.letters, dtype=np.int64)
    jn = standard_word(n)
    V = _accel.apply_monomial_batch(letters, A, idx, n, "numba")

    cases = {
        f"reduced words n={n}": lambda b: _accel.reduced_words_array(n, b),
        f"commutation classes n={n}": lambda b: _accel.commutation_class_labels(words, n, b),
        f"apply monomial x{args.batch}": lambda b: _accel.apply_monomial_batch(letters, A, idx, n, b),
        f"string extract x{args.batch}": lambda b: _accel.string_extract_batch(V, jn.letters, idx, n, b),
    }
    print(f"{'kernel':<32}{'numba (s)':>12}{'numpy (s)':>12}{'speedup':>10}")
    for name, fn in cases.items():
        # the first call also compiles or loads the numba cache
        assert np.array_equal(_first(fn("numba")), _first(fn("numpy"))), f"backends disagree on {name}"
        t_nb = best_of(lambda: fn("numba"), args.repeat)
        t_np = best_of(lambda: fn("numpy"), args.repeat)
        print(f"{name:<32}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>10.1f}x")


if __name__ == "__main__":
    main()
