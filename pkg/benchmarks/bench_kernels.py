"""Compare the compiled kernel backend against the pure-Python fallback.

Times the per-point routines that dominate finite-difference stencils and
sampling loops.  Run from the repository root after an editable install:

    python benchmarks/bench_kernels.py [--repeats 20000] [--n 8]
"""

import argparse
import math
import time

import numpy as np

from rothyp._kernels import _pure

try:
    from rothyp._kernels import _speed
except ImportError:
    _speed = None


def _time(fn, args, repeats):
    best = math.inf
    for _ in range(5):
        start = time.perf_counter()
        for _ in range(repeats):
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best / repeats


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=20000)
    parser.add_argument("--n", type=int, default=8,
                        help="ambient dimension for the synthetic point")
    args = parser.parse_args()

    rng = np.random.default_rng(7)
    m = args.n - 2
    angles = rng.uniform(-1.2, 1.2, m)
    angles[0] = rng.uniform(-math.pi, math.pi)
    fval, fp, fpp = 1.3, 0.8, -0.2
    phival, php, phpp = 0.4, 0.6, 0.5
    w = math.hypot(fp, php)
    eps = (-1.0) ** args.n
    spectrum = rng.standard_normal(args.n - 1)

    cases = [
        ("unit_direction", (angles,)),
        ("immersion_point", (fval, phival, angles)),
        ("gauss_point", (eps, fp, php, w, angles)),
        ("frame_rows", (fp, php, w, angles)),
        ("form_diagonals", (eps, fval, fp, fpp, php, phpp, w, angles)),
        ("elem_sym_table", (spectrum,)),
    ]

    if _speed is None:
        print("compiled backend unavailable; timing the fallback only")
    print(f"n = {args.n}, repeats = {args.repeats}")
    print(f"{'kernel':<16} {'python us':>10} {'compiled us':>12} {'speedup':>8}")
    for name, call_args in cases:
        pure_fn = getattr(_pure, name)
        t_pure = _time(pure_fn, call_args, args.repeats)
        if _speed is not None:
            fast_fn = getattr(_speed, name)
            out_pure = np.asarray(pure_fn(*call_args))
            out_fast = np.asarray(fast_fn(*call_args))
            if not np.allclose(out_pure, out_fast, rtol=1e-14, atol=1e-14):
                raise AssertionError(f"backend disagreement in {name}")
            t_fast = _time(fast_fn, call_args, args.repeats)
            print(f"{name:<16} {t_pure * 1e6:>10.3f} {t_fast * 1e6:>12.3f} "
                  f"{t_pure / t_fast:>8.2f}x")
        else:
            print(f"{name:<16} {t_pure * 1e6:>10.3f} {'-':>12} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
