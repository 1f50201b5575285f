import math

import numpy as np
import pytest

from zetaladder import mvt
from zetaladder.errors import ConfigError, DomainError
from zetaladder.zeta import zeta_two_sigma


def test_exact_oracle_sigma3():
    # at sigma = 3 the series tail past M = 4000 is below 1e-13 of the integral
    integral, _ = mvt.integrate_abs_sq(3.0, 500.0, 60.0)
    assert integral == pytest.approx(mvt.exact_polynomial_mean(3.0, 500.0, 60.0, 4000), rel=1e-10)


def test_vanishing_interval():
    integral, res = mvt.local_mean_value(3.0, 1234.0, 1e-6)
    assert abs(integral) < 1e-5 and abs(res) < 1e-5


def test_sigma2_T1e3_U100():
    _, res = mvt.local_mean_value(2.0, 1e3, 100.0)
    assert abs(res) <= 1.0


def test_sigma12_T1e5_within_bound_sums():
    e = mvt.mean_value_entry(1.2, 1e5, 1e3)
    assert abs(e.residual) <= e.bound


def test_additivity():
    a, _ = mvt.integrate_abs_sq(1.5, 2e4, 30.0)
    b, _ = mvt.integrate_abs_sq(1.5, 2e4 + 30.0, 45.0)
    c, _ = mvt.integrate_abs_sq(1.5, 2e4, 75.0)
    assert c == pytest.approx(a + b, rel=1e-8)


def test_translation_no_growth():
    def max_res(T):
        return max(abs(mvt.local_mean_value(1.5, T + d, 100.0)[1]) for d in (0.0, 250.0, 500.0, 750.0, 900.0))

    r5, r6 = max_res(1e5), max_res(1e6)
    assert r6 <= 2.0 * r5 and r5 <= 2.0 * r6


def test_single_entry_scan_matches():
    rep = mvt.uniformity_scan([2.0], [1e3], [50.0])
    integral, res = mvt.local_mean_value(2.0, 1e3, 50.0)
    assert rep.entries[0].integral == integral and rep.entries[0].residual == res


def test_scan_sorted_and_jobs_invariant():
    a = mvt.uniformity_scan([2.0, 1.5], [1e4, 1e3], ["lnln", 10.0])
    b = mvt.uniformity_scan([2.0, 1.5], [1e4, 1e3], ["lnln", 10.0], jobs=3)
    keys = [(e.sigma, e.T, e.U) for e in a.entries]
    assert keys == sorted(keys)
    assert a == b


def test_scan_errors():
    with pytest.raises(ConfigError):
        mvt.uniformity_scan([], [1e3], [1.0])
    with pytest.raises(DomainError):
        mvt.uniformity_scan([1.05], [1e3], [1.0])


def test_resolve_and_grid():
    assert mvt.resolve_U("lnln", 1e4) == math.log(math.log(1e4))
    assert mvt.log_grid("1e3:1e6:log4") == [1e3, 1e4, 1e5, 1e6]
    with pytest.raises(ConfigError):
        mvt.log_grid("1e3:1e6")


def test_trend_slope_fits_line():
    entries = [mvt.MVTEntry(2.0, T, 1.0, 0.0, 1.0, 0.1 * math.log(T) + 0.3, 1, 1.0) for T in (1e3, 1e4, 1e5)]
    assert mvt.trend_slope(entries) == pytest.approx(0.1, rel=1e-10)


def test_s1_values_and_bounds():
    assert mvt.s1_bound(2.0, 1000) <= 4.0
    assert mvt.s1_bound(1.5, 10**4) <= 9.0
    assert mvt.doubling_change(mvt.s1_bound, 2.0, 1000) < 1e-2
    # brute-force double sum at small n_max
    n_max, s = 50, 2.0
    ref = sum((m * n) ** -s for n in range(1, n_max + 1) for m in range(1, n_max) if m < n / 2)
    assert mvt.s1_bound(s, n_max) == pytest.approx(ref, rel=1e-13)


def test_s2_values_and_monotone():
    n_max, s = 40, 1.7
    ref = sum(n / ((n - r) * n) ** s / r for n in range(1, n_max + 1) for r in range(1, n_max) if r < n / 2)
    assert mvt.s2_bound(s, n_max) == pytest.approx(ref, rel=1e-13)
    assert mvt.s2_bound(3.0, 1000) < mvt.s2_bound(1.5, 1000)
    assert mvt.doubling_change(mvt.s2_bound, 2.0, 1000) < 1e-3


def test_full_kernel_under_envelope():
    full = mvt.full_kernel_sum(2.0, 1000)
    assert full <= mvt.s1_bound(2.0, 1000) + mvt.s2_envelope(2.0)


def test_zeta2sigma_column():
    e = mvt.mean_value_entry(1.5, 1e3, 10.0)
    assert e.zeta2sigma == zeta_two_sigma(1.5)
    assert e.residual == e.integral - e.zeta2sigma * 10.0


def test_panel_convergence_reported():
    e = mvt.mean_value_entry(1.2, 1e4, 100.0)
    assert e.panels > 0 and np.isfinite(e.residual)


def test_sigma12_against_euler_maclaurin_quadrature():
    # independent route: GL16 on unit panels of Euler-Maclaurin values
    from zetaladder.zeta import zeta_em

    T, U, s = 1e5, 100.0, 1.2
    x, w = np.polynomial.legendre.leggauss(16)
    ref = sum(0.5 * float(np.dot(w, [zeta_em(s, T + k + 0.5 + 0.5 * xi).abs_sq for xi in x])) for k in range(100))
    integral, _ = mvt.integrate_abs_sq(s, T, U)
    assert integral == pytest.approx(ref, rel=1e-10)
