import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaladder import zeta
from zetaladder.errors import DomainError, PoleError, SeriesInfeasible

mpmath.mp.dps = 30


def mp_zeta(sigma, t):
    return complex(mpmath.zeta(mpmath.mpc(sigma, t)))


def rel(a, b):
    return abs(a - b) / abs(b)


def test_closed_form_values():
    assert zeta.zeta_em(2.0, 0.0).value_re == pytest.approx(math.pi**2 / 6, rel=1e-14)
    assert zeta.zeta_em(4.0, 0.0).value_re == pytest.approx(math.pi**4 / 90, rel=1e-14)
    assert zeta.zeta_two_sigma(2.0) == pytest.approx(math.pi**4 / 90, rel=1e-14)


@pytest.mark.parametrize("sigma,t", [(0.5, 10.0), (0.5, 1000.0), (0.75, 55.5), (1.5, 3.0), (3.0, 250.0),
                                     (0.2, 40.0)])
def test_em_against_mpmath(sigma, t):
    assert rel(zeta.zeta_em(sigma, t).value, mp_zeta(sigma, t)) < 1e-10


@pytest.mark.parametrize("sigma,t", [(1.1, 0.0), (1.1, 20.0), (1.2, 9000.0), (1.5, 123.4), (2.0, 1e5),
                                     (5.0, 3.0), (1.0 + 1e-5, 500.0)])
def test_dirichlet_against_mpmath(sigma, t):
    assert rel(zeta.zeta_dirichlet(sigma, t).value, mp_zeta(sigma, t)) < 1e-10


@pytest.mark.parametrize("t", [2.0, 5.0, 14.0, 100.0, 1234.5, 1e5, 1e6 + 0.3])
def test_hardy_z_against_mpmath(t):
    # double-precision phases t ln n carry an absolute error of about eps t ln t
    ref = float(mpmath.siegelz(t))
    tol = max(1e-13, 1e-15 * t * math.log(t))
    assert abs(zeta.hardy_z(t) - ref) <= tol * max(1.0, abs(ref))


@pytest.mark.parametrize("t", [2.0, 3.0, 9.99, 10.0, 50.0, 1e4, 1e7])
def test_theta_against_mpmath(t):
    assert abs(float(zeta.theta([t])[0]) - float(mpmath.siegeltheta(t))) < 1e-12 * max(1.0, t / 100)


def test_first_zero():
    assert zeta.first_zero_bracket() == pytest.approx(float(mpmath.zetazero(1).imag), abs=1e-12)
    assert zeta.hardy_z(14.134725141734693) ** 2 < 1e-24


def test_errors():
    with pytest.raises(PoleError):
        zeta.zeta_em(1.0, 0.0)
    with pytest.raises(DomainError):
        zeta.zeta_em(-0.5, 3.0)
    with pytest.raises(SeriesInfeasible):
        zeta.zeta_dirichlet(0.9, 10.0)
    with pytest.raises(DomainError):
        zeta.hardy_z(1.5)
    with pytest.raises(SeriesInfeasible):
        zeta.zeta_dirichlet(1.1, 1e6, zeta.EvalConfig(max_terms=1000))


def test_dispatch():
    assert zeta.dispatch_route(0.5, 10.0) == "hardy"
    assert zeta.dispatch_route(0.5, 1.0) == "euler-maclaurin"
    assert zeta.dispatch_route(2.0, 1.0) == "dirichlet"
    assert zeta.dispatch_route(0.9, 1.0) == "euler-maclaurin"
    assert zeta.abs_zeta_sq(0.5, 20.0) == pytest.approx(zeta.zeta_em(0.5, 20.0).abs_sq, rel=1e-8)


def test_array_matches_scalar():
    t = np.linspace(1e3, 1.1e3, 17)
    arr = zeta.abs_zeta_sq_array(1.3, t)
    single = np.array([zeta.abs_zeta_sq(1.3, x) for x in t])
    np.testing.assert_allclose(arr, single, rtol=1e-12)
    np.testing.assert_allclose(zeta.abs_zeta_sq_array(0.5, t), zeta.hardy_z_array(t) ** 2, rtol=0)


def test_sample_json_fields():
    d = zeta.zeta_dirichlet(2.0, 10.0).to_dict()
    assert set(d) == {"sigma", "t", "value_re", "value_im", "abs_sq", "method", "terms", "err_est"}


@settings(max_examples=60, deadline=None)
@given(st.floats(1.1, 4.0), st.floats(0.0, 5e4))
def test_conjugate_symmetry(sigma, t):
    a = zeta.zeta_dirichlet(sigma, t)
    b = zeta.zeta_dirichlet(sigma, -t)
    assert a.abs_sq == b.abs_sq
    assert a.value_im == -b.value_im


@settings(max_examples=60, deadline=None)
@given(st.floats(1.1, 4.0), st.floats(0.0, 5e4))
def test_euler_product_bounds(sigma, t):
    # zeta(2s)/zeta(s) <= |zeta(s + it)| <= zeta(s) for real s > 1
    zs = zeta._zeta_real(sigma)
    z2s = zeta.zeta_two_sigma(sigma)
    v = math.sqrt(zeta.abs_zeta_sq(sigma, t))
    assert z2s / zs * (1 - 1e-9) <= v <= zs * (1 + 1e-9)


@settings(max_examples=40, deadline=None)
@given(st.floats(10.0, 1e4))
def test_hardy_is_real_rotation(t):
    # Z(t) = exp(i theta) zeta(1/2 + it) is real
    w = zeta.zeta_em(0.5, t).value * complex(math.cos(float(zeta.theta([t])[0])),
                                             math.sin(float(zeta.theta([t])[0])))
    assert abs(w.imag) <= 1e-8 * max(1.0, abs(w))
    assert w.real == pytest.approx(zeta.hardy_z(t), rel=1e-6, abs=1e-9)
