"""Compare the jitted kernels against their pure-Python/numpy fallbacks.

Run: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from partbij import _accel
from partbij._accel import _AXIS_CODES, _convolve_numpy, _convolve_pairs, _hist_py


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_convolve():
    rng = np.random.default_rng(42)
    shape = (19, 19, 11)
    a = rng.integers(-50, 50, size=shape).astype(np.int64)
    b = rng.integers(-50, 50, size=shape).astype(np.int64)
    assert np.array_equal(_convolve_pairs(a, b), _convolve_numpy(a, b))
    rows = []
    if _accel.USE_NUMBA:
        _convolve_pairs(a, b)  # compile before timing
        rows.append(("convolve 19x19x11", "numba pair loop",
                     timeit(lambda: _convolve_pairs(a, b))))
    rows.append(("convolve 19x19x11", "numpy shift-add",
                 timeit(lambda: _convolve_numpy(a, b))))
    return rows


def hist_args(q, z):
    kinds = np.array([_AXIS_CODES["weight"], _AXIS_CODES["size"]],
                     dtype=np.int64)
    bounds = np.array([q, z], dtype=np.int64)
    out = np.zeros((q + 1) * (z + 1), dtype=np.int64)
    strides = np.array([z + 1, 1], dtype=np.int64)
    return (2, 1, z, z, 1, 0, 0, kinds, bounds, strides, out), out


def bench_histogram():
    rows = []
    label = "histogram q<=30 z<=90 distinct"
    args, out_jit = hist_args(30, 90)
    if _accel.USE_NUMBA:
        _accel._hist(*args)  # compile before timing
        out_jit[:] = 0

        def run_jit():
            out_jit[:] = 0
            _accel._hist(*args)

        rows.append((label, "numba search", timeit(run_jit)))
    args_py, out_py = hist_args(30, 90)

    def run_py():
        out_py[:] = 0
        _hist_py(*args_py)

    rows.append((label, "python search", timeit(run_py, repeat=2)))
    if _accel.USE_NUMBA:
        run_jit()
        run_py()
        assert np.array_equal(out_jit, out_py)
    return rows


def main():
    mode = "numba enabled" if _accel.USE_NUMBA else "fallback only"
    print(f"kernel benchmark ({mode})")
    rows = bench_convolve() + bench_histogram()
    width = max(len(r[0]) for r in rows)
    for name, impl, best in rows:
        print(f"{name:<{width}}  {impl:<15}  {best * 1000:9.2f} ms")
    by_name = {}
    for name, impl, best in rows:
        by_name.setdefault(name, []).append(best)
    for name, times in by_name.items():
        if len(times) == 2:
            print(f"{name}: speedup x{times[1] / times[0]:.1f}")


if __name__ == "__main__":
    main()
