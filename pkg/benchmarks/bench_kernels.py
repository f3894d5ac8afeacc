"""Compare the compiled and pure-Python kernel backends.

Times the exhaustive closure-bound sweep (every complete DFA with the given
state count over a binary alphabet) on both backends, then runs the larger
sweep on the compiled backend only.

Usage: python3 benchmarks/bench_kernels.py
"""

import time

from closedlang.kernels import get_backend


def timed(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    py = get_backend("python")
    try:
        nb = get_backend("numba")
    except ValueError:
        nb = None

    n, k = 3, 2
    t_py = timed(py.sweep_closure_bounds, n, k)
    print(f"sweep_closure_bounds({n},{k})  python: {t_py:8.3f}s")
    if nb is None:
        print("numba backend unavailable; skipping compiled timings")
        return

    nb.sweep_closure_bounds(2, 2)  # warm up the JIT before timing
    t_nb = timed(nb.sweep_closure_bounds, n, k)
    print(f"sweep_closure_bounds({n},{k})  numba:  {t_nb:8.3f}s  ({t_py / t_nb:,.0f}x)")

    n = 4
    t_big = timed(nb.sweep_closure_bounds, n, k, repeat=1)
    print(f"sweep_closure_bounds({n},{k})  numba:  {t_big:8.3f}s  (python skipped: too slow)")


if __name__ == "__main__":
    main()
