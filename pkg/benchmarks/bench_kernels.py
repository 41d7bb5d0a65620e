#!/usr/bin/env python3
"""Benchmark the compiled RK4 kernel against the pure-Python fallback.

Times a single outward Dirac-Coulomb sweep (the unit of work repeated tens
of times inside every eigenvalue search) and one full bound-state solve.

    python benchmarks/bench_kernels.py [--points 20000] [--repeats 5]
"""
import argparse
import math
import time

import numpy as np

from diraconf._kernels import fallback

try:
    from diraconf._kernels import _shoot
except ImportError:
    _shoot = None


def build_problem(points):
    lam, m, kappa, e = 0.5, 1.0, -1, 0.8660254037844386
    t = np.linspace(math.log(2e-6), math.log(60.0), points)
    tt = np.linspace(math.log(2e-6), math.log(60.0), 2 * points - 1)
    r = np.exp(tt)
    p = e + m + lam / r
    q = e - m + lam / r
    a11 = np.full_like(r, -(kappa + 1.0))
    a12 = r * p
    a21 = -r * q
    a22 = np.full_like(r, kappa - 1.0)
    steps = np.diff(t)
    s = math.sqrt(kappa * kappa - lam * lam)
    f0 = float(np.exp(t[0])) ** (s - 1.0)
    g0 = (s + kappa) / lam * f0
    return steps, a11, a12, a21, a22, f0, g0


def time_kernel(kernel, args, points, repeats):
    steps, a11, a12, a21, a22, f0, g0 = args
    f = np.empty(points)
    g = np.empty(points)
    sc = np.empty(points)
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        status = kernel(steps, a11, a12, a21, a22, f0, g0, False, f, g, sc)
        best = min(best, time.perf_counter() - t0)
        assert status == 0
    return best


def time_full_solve(points, repeats):
    from diraconf.coulomb import dirac_coulomb_energy
    from diraconf.radial_solver import (RadialGrid, coulomb_potential,
                                        find_bound_state, suggest_rmax)
    lam, m = 0.5, 1.0
    e_ref = dirac_coulomb_energy(2, -1, lam, m)
    pot = coulomb_potential(lam)
    grid = RadialGrid(1e-6 / lam,
                      suggest_rmax(pot, -1, e_ref, m, r_start=16.0 / lam),
                      points)
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        find_bound_state(pot, -1, m, grid, (e_ref - 0.005, e_ref + 0.005), 1)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    problem = build_problem(args.points)
    t_py = time_kernel(fallback.rk4_linear2x2, problem, args.points,
                       args.repeats)
    print(f"{'backend':<10} {'sweep':>12} {'per step':>12}")
    print(f"{'python':<10} {t_py:>10.4f} s {t_py / args.points * 1e6:>9.2f} us")
    if _shoot is not None:
        t_cy = time_kernel(_shoot.rk4_linear2x2, problem, args.points,
                           args.repeats)
        print(f"{'cython':<10} {t_cy:>10.4f} s "
              f"{t_cy / args.points * 1e6:>9.2f} us")
        print(f"speedup: {t_py / t_cy:.1f}x")
    else:
        print("cython    (extension not built)")

    from diraconf._kernels import BACKEND
    t_solve = time_full_solve(args.points, max(1, args.repeats // 2))
    print(f"\nfull bound-state solve ({args.points} points, "
          f"{BACKEND} backend): {t_solve:.3f} s")


if __name__ == "__main__":
    main()
