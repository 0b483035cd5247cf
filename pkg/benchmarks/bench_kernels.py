"""Time the compiled kernels against their NumPy fallbacks.

Usage: python benchmarks/bench_kernels.py [--shots N] [--repeat R]
"""

import argparse
import timeit

import numpy as np

from fcps import _pure, cannon

try:
    from fcps import _native
except ImportError:
    _native = None


def impact_args(n, seed=0):
    rng = np.random.default_rng(seed)
    env = cannon.generate_environment(seed)
    lo, hi = cannon.THETA_BOUNDS.T
    th = rng.uniform(lo, hi, (n, 3))
    return (np.ascontiguousarray(env.terrain.as_array()), float(env.terrain.height(0.0, 0.0)),
            np.ascontiguousarray(th[:, 0]), np.ascontiguousarray(th[:, 1]),
            np.ascontiguousarray(th[:, 2]), cannon.TIME_STEP, cannon.TIME_TOLERANCE,
            cannon.MAX_FLIGHT_TIME)


def se_args(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.random((n, 3)), rng.random((n, 3)), np.full(3, 0.3), 1.0


def best_of(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--shots", type=int, default=2000)
    parser.add_argument("--points", type=int, default=400)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    cases = [("impact_batch", f"{args.shots} shots", impact_args(args.shots)),
             ("se_cross", f"{args.points}x{args.points}", se_args(args.points))]
    print(f"{'kernel':<14}{'size':<14}{'python [s]':>12}{'native [s]':>12}{'speedup':>10}")
    for name, size, call_args in cases:
        t_py = best_of(getattr(_pure, name), call_args, args.repeat)
        if _native is None:
            print(f"{name:<14}{size:<14}{t_py:>12.4f}{'n/a':>12}{'n/a':>10}")
            continue
        t_c = best_of(getattr(_native, name), call_args, args.repeat)
        print(f"{name:<14}{size:<14}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
