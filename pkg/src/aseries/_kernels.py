"""Adaptive 7/15-point Gauss-Kronrod kernels for theta^p sin(theta)^nu cos(theta).

Two interchangeable implementations share one refinement rule: an interval is
accepted once its Gauss/Kronrod discrepancy is below ``tol * length / span``;
otherwise it is bisected.  The numba kernel walks an explicit stack; the numpy
kernel refines all pending intervals of a level at once.  Set
``ASERIES_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
# Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7]
WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

# full symmetric node/weight vectors for the vectorized path
_NODES = np.concatenate([-XGK[:-1], XGK[::-1]])
_KW = np.concatenate([WGK[:-1], WGK[::-1]])
_GW = np.zeros(15)
for _i, _w in zip((1, 3, 5), WG[:3]):
    _GW[_i] = _w
    _GW[14 - _i] = _w
_GW[7] = WG[3]

MIN_WIDTH = 1e-12
MAX_INTERVALS = 200000


def numba_disabled() -> bool:
    return os.environ.get("ASERIES_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")


def adaptive_numpy(p: int, nu: int, a: float, b: float, tol: float) -> tuple[float, float, int]:
    span = b - a
    if span == 0.0:
        return 0.0, 0.0, 0
    lo = np.array([a])
    hi = np.array([b])
    total = 0.0
    err_total = 0.0
    evals = 0
    while lo.size:
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        theta = mid[:, None] + half[:, None] * _NODES[None, :]
        f = theta**p * np.sin(theta) ** nu * np.cos(theta)
        evals += f.size
        kron = (f @ _KW) * half
        gauss = (f @ _GW) * half
        err = np.abs(kron - gauss)
        width = hi - lo
        done = (err <= tol * width / span) | (width < MIN_WIDTH)
        total += float(np.sum(kron[done]))
        err_total += float(np.sum(err[done]))
        lo, hi, mid = lo[~done], hi[~done], mid[~done]
        if lo.size > MAX_INTERVALS:
            raise ArithmeticError("quadrature did not converge")
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
    return total, err_total, evals


def _adaptive_python(p, nu, a, b, tol, xgk, wgk, wg):
    # body shared with the numba build; stack of pending intervals
    span = b - a
    if span == 0.0:
        return 0.0, 0.0, 0
    stack_lo = np.empty(256)
    stack_hi = np.empty(256)
    stack_lo[0] = a
    stack_hi[0] = b
    top = 1
    total = 0.0
    err_total = 0.0
    evals = 0
    while top > 0:
        top -= 1
        lo = stack_lo[top]
        hi = stack_hi[top]
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        fc = mid**p * np.sin(mid) ** nu * np.cos(mid)
        kron = wgk[7] * fc
        gauss = wg[3] * fc
        for j in range(7):
            d = half * xgk[j]
            t1 = mid - d
            t2 = mid + d
            s = t1**p * np.sin(t1) ** nu * np.cos(t1) + t2**p * np.sin(t2) ** nu * np.cos(t2)
            kron += wgk[j] * s
            if j % 2 == 1:
                gauss += wg[j // 2] * s
        kron *= half
        gauss *= half
        evals += 15
        err = abs(kron - gauss)
        width = hi - lo
        if err <= tol * width / span or width < 1e-12:
            total += kron
            err_total += err
        else:
            if top + 2 > stack_lo.shape[0]:
                raise ArithmeticError("quadrature stack overflow")
            # push the right half first so the left half is processed next
            stack_lo[top] = mid
            stack_hi[top] = hi
            stack_lo[top + 1] = lo
            stack_hi[top + 1] = mid
            top += 2
    return total, err_total, evals


try:
    if numba_disabled():
        raise ImportError
    from numba import njit

    _adaptive_numba = njit(cache=False)(_adaptive_python)
    HAVE_NUMBA = True
except ImportError:
    _adaptive_numba = None
    HAVE_NUMBA = False


def adaptive_numba(p: int, nu: int, a: float, b: float, tol: float) -> tuple[float, float, int]:
    if _adaptive_numba is None:
        raise RuntimeError("numba kernel unavailable")
    return _adaptive_numba(p, nu, float(a), float(b), float(tol), XGK, WGK, WG)


def adaptive(p: int, nu: int, a: float, b: float, tol: float) -> tuple[float, float, int]:
    """Dispatch to the numba kernel unless it is disabled or missing."""
    if _adaptive_numba is not None and not numba_disabled():
        return adaptive_numba(p, nu, a, b, tol)
    return adaptive_numpy(p, nu, a, b, tol)
