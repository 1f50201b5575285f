import os
import subprocess
import sys

import numpy as np
import pytest

from zetaladder import _backend, _fallback

kernels = pytest.importorskip("zetaladder._kernels")

T = np.array([2.0, 6.3, 10.0, 99.5, 1234.567, 1e5 + 0.25, 3e6])


def test_compiled_is_default():
    assert _backend.COMPILED and _backend.NAME == "compiled"


def test_theta_and_hardy_agree():
    np.testing.assert_allclose(kernels.theta_points(T), _fallback.theta_points(T), rtol=1e-15)
    np.testing.assert_allclose(kernels.hardy_z_points(T), _fallback.hardy_z_points(T), rtol=0, atol=1e-11)
    np.testing.assert_allclose(kernels.rs_remainder(T), _fallback.rs_remainder(T), rtol=1e-13, atol=1e-16)


@pytest.mark.parametrize("sigma,n", [(1.2, 5000), (2.0, 40), (3.5, 1)])
def test_dirichlet_points_agree(sigma, n):
    a = kernels.dirichlet_points(T, sigma, n)
    b = _fallback.dirichlet_points(T, sigma, n)
    np.testing.assert_allclose(a, b, rtol=1e-12)


def test_grid_kernels_agree():
    x, w = np.polynomial.legendre.leggauss(8)
    a = kernels.z2_panels(1e4, 0.3, 700, x, w)
    b = _fallback.z2_panels(1e4, 0.3, 700, x, w)
    np.testing.assert_allclose(a, b, rtol=1e-9, atol=1e-12)
    x16, _ = np.polynomial.legendre.leggauss(16)
    a = kernels.dirichlet_grid(5e4, 0.5, 70, x16, 1.3, 12000)
    b = _fallback.dirichlet_grid(5e4, 0.5, 70, x16, 1.3, 12000)
    np.testing.assert_allclose(a, b, rtol=1e-11)


def test_pure_switch_in_subprocess():
    code = ("import zetaladder as z; print(z.BACKEND); "
            "print(repr(z.solve_ladder(2000.0))); print(repr(z.abs_zeta_sq(1.5, 777.0)))")
    env = dict(os.environ, ZLL_PURE="1")
    pure = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    env.pop("ZLL_PURE")
    comp = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    p, c = pure.stdout.split(), comp.stdout.split()
    assert p[0] == "numpy" and c[0] == "compiled"
    assert float(p[1]) == pytest.approx(float(c[1]), rel=1e-12)
    assert float(p[2]) == pytest.approx(float(c[2]), rel=1e-12)
