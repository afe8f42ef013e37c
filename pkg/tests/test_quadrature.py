import math
import os
import subprocess
import sys

import pytest

from aseries import _kernels
from aseries.quadrature import integrate_angle, integrate_between, integrate_moment


def test_anchor_values():
    # int_0^1 t asin t dt = pi/8, int_0^1 asin t dt = pi/2 - 1
    assert integrate_moment(1, 1, 1.0).value == pytest.approx(math.pi / 8, abs=1e-14)
    assert integrate_moment(1, 0, 1.0).value == pytest.approx(math.pi / 2 - 1, abs=1e-14)
    assert integrate_moment(2, 0, 1.0).value == pytest.approx(math.pi**2 / 4 - 2, abs=1e-14)


def test_additivity():
    for p in range(1, 5):
        for nu in (0, 3, 8):
            whole = integrate_moment(p, nu, 0.9).value
            parts = integrate_moment(p, nu, 0.4).value + integrate_between(p, nu, 0.4, 0.9).value
            assert whole == pytest.approx(parts, abs=1e-14)


def test_monotone_in_upper_limit():
    for p in range(1, 5):
        vals = [integrate_moment(p, 2, x).value for x in (0.2, 0.5, 0.8, 1.0)]
        assert all(b > a > 0 for a, b in zip(vals, vals[1:]))


def test_empty_interval():
    assert integrate_angle(2, 3, 0.5, 0.5).value == 0.0


def test_domain_errors():
    with pytest.raises(ValueError):
        integrate_moment(1, 0, 1.2)
    with pytest.raises(ValueError):
        integrate_moment(1, 0, 0.0)
    with pytest.raises(ValueError):
        integrate_between(1, 0, 0.6, 0.4)
    with pytest.raises(ValueError):
        integrate_moment(5, 0, 0.5)
    with pytest.raises(ValueError):
        integrate_moment(1, -1, 0.5)


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
def test_kernels_agree():
    for p in range(1, 5):
        for nu in (0, 1, 5, 12):
            b = math.asin(0.97)
            v1, _, _ = _kernels.adaptive_numpy(p, nu, 0.0, b, 1e-13)
            v2, _, _ = _kernels.adaptive_numba(p, nu, 0.0, b, 1e-13)
            assert v1 == pytest.approx(v2, abs=1e-15)


def test_numpy_fallback_via_env():
    env = dict(os.environ, ASERIES_DISABLE_NUMBA="1")
    code = (
        "from aseries import _kernels; from aseries.quadrature import integrate_moment; "
        "import math; assert not _kernels.HAVE_NUMBA; "
        "assert abs(integrate_moment(1, 1, 1.0).value - math.pi / 8) < 1e-14; print('ok')"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "ok"
