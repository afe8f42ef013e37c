#!/usr/bin/env python3
"""Time the numba and numpy quadrature kernels on the moment-integral grid."""

from __future__ import annotations

import argparse
import math
import time

from aseries import _kernels
from aseries.quadrature import TOLERANCE


def grid(max_nu: int):
    for p in range(1, 5):
        for nu in range(max_nu + 1):
            for x in (0.2, 0.5, 0.8, 1.0):
                yield p, nu, math.asin(x)


def run(kernel, cases, repeat: int) -> tuple[float, list[float]]:
    best = math.inf
    values = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        values = [kernel(p, nu, 0.0, b, TOLERANCE)[0] for p, nu, b in cases]
        best = min(best, time.perf_counter() - t0)
    return best, values


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-nu", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    cases = list(grid(args.max_nu))
    t_np, v_np = run(_kernels.adaptive_numpy, cases, args.repeat)
    print(f"numpy : {len(cases)} integrals in {t_np * 1e3:8.2f} ms")
    if not _kernels.HAVE_NUMBA:
        print("numba : unavailable (not installed or ASERIES_DISABLE_NUMBA set)")
        return
    _kernels.adaptive_numba(1, 0, 0.0, 1.0, TOLERANCE)  # compile outside the timed region
    t_nb, v_nb = run(_kernels.adaptive_numba, cases, args.repeat)
    diff = max(abs(a - b) for a, b in zip(v_np, v_nb))
    print(f"numba : {len(cases)} integrals in {t_nb * 1e3:8.2f} ms")
    print(f"speedup {t_np / t_nb:.1f}x, max |numpy - numba| = {diff:.2e}")


if __name__ == "__main__":
    main()
