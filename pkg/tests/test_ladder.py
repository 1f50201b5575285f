import math

import numpy as np
import pytest

from zetaladder import ladder
from zetaladder import primes
from zetaladder.errors import ConfigError, ConstraintError, DomainError, RangeError, TableFormatError


@pytest.fixture(scope="module")
def quad():
    return ladder.Z2Quadrature()


def test_empty_interval(quad):
    assert quad.integrate(100.0, 100.0) == 0.0


def test_domain(quad):
    with pytest.raises(DomainError):
        quad.integrate(1.0, 5.0)
    with pytest.raises(DomainError):
        quad.integrate(50.0, 10.0)


def test_low_range_against_mpmath(quad):
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 15
    ref = float(mpmath.quad(lambda t: mpmath.siegelz(t) ** 2, mpmath.linspace(3, 40, 39)))
    assert quad.integrate(3.0, 40.0) == pytest.approx(ref, rel=1e-12)


def test_head_against_mpmath(quad):
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 20
    ref = float(mpmath.quad(lambda t: abs(mpmath.zeta(mpmath.mpc(0.5, t))) ** 2, [0, 1, 2]))
    assert quad.head() == pytest.approx(ref, abs=1e-10)


def test_ten_unit_subintervals(quad):
    whole = quad.integrate(1e3, 1e3 + 10)
    parts = sum(quad.integrate(1e3 + k, 1e3 + k + 1) for k in range(10))
    assert abs(whole - parts) <= 1e-9 * whole


@pytest.mark.parametrize("a,b,c", [(2.0, 500.0, 2000.0), (15.0, 20.0, 33.3), (1234.5, 1500.25, 9000.0)])
def test_additive(quad, a, b, c):
    assert quad.integrate(a, c) == pytest.approx(quad.integrate(a, b) + quad.integrate(b, c), rel=1e-9)


def test_cumulative_matches_integrate(quad):
    pts = np.array([3.0, 20.0, 500.0, 1e3, 1e3 + 0.1, 5e3])
    cum = quad.cumulative(pts)
    assert list(cum) == [quad.integrate(2.0, float(p)) for p in pts]


def test_jobs_do_not_change_bits():
    a = ladder.Z2Quadrature(jobs=1).cumulative([1e3, 4e4])
    b = ladder.Z2Quadrature(jobs=4).cumulative([1e3, 4e4])
    assert a.tobytes() == b.tobytes()


def test_panel_refinement_error_small(quad):
    assert quad.estimate_error(1e3, 2e3) < 1e-6 * 1e3


def test_newton_iterations_at_1e4():
    sol = ladder.solve_ladder_detail(1e4)
    assert sol.iterations <= 10
    assert abs(sol.residual) <= 1e-6 * sol.integral
    assert 0 < sol.V < 1e4


def test_solve_domain():
    with pytest.raises(DomainError):
        ladder.solve_ladder(999.0)


def test_solve_for_integral_inverts_lhs():
    for V in (1e3, 5e4, 1e6):
        sol = ladder.solve_for_integral(ladder.ladder_lhs(V), 1.1 * V)
        assert sol.V == pytest.approx(V, rel=1e-14)


def test_monotone_and_drift_at_1e5():
    quad = ladder.Z2Quadrature()
    v1 = ladder.solve_ladder(1e5, quad=quad)
    v2 = ladder.solve_ladder(1e5 + 100, quad=quad)
    assert v2 > v1
    pc = primes.build_counter(10**5)
    ratio = (1e5 - v1) / primes.expected_drift(pc, 1e5)
    assert 0.7 <= ratio <= 1.4


def test_table_basics(small_table):
    t = small_table
    assert np.all(np.diff(t.phi1) > 0)
    assert np.all(t.phi1 < t.grid)
    i = 5000
    assert ladder.phi1(t, float(t.grid[i])) == t.phi1[i]
    mid = 0.5 * (t.grid[i] + t.grid[i + 1])
    assert t.phi1[i] < ladder.phi1(t, mid) < t.phi1[i + 1]
    assert ladder.phi1_prime(t, mid) >= 0


def test_table_against_independent_solves(small_table):
    for T in (1e3, 2345.0, 1.2e4):
        assert ladder.phi1(small_table, T) == pytest.approx(ladder.solve_ladder(T), rel=1e-8)


def test_table_range_errors(small_table):
    with pytest.raises(RangeError):
        ladder.phi1(small_table, 999.0)
    with pytest.raises(RangeError):
        ladder.phi1_prime(small_table, small_table.t_max)
    with pytest.raises(ConfigError):
        ladder.build_table(1e3, 2e3, 10)
    with pytest.raises(ConfigError):
        ladder.build_table(1e3, 2e3, 10**9)
    with pytest.raises(DomainError):
        ladder.build_table(500.0, 2e3, 100)


def test_z_tilde_sq_definition():
    from zetaladder.zeta import hardy_z

    assert ladder.z_tilde_sq(1e4) == hardy_z(1e4) ** 2 / math.log(1e4)


def test_slope_difference_quotient(small_table):
    t = small_table
    a, b = float(t.grid[100]), float(t.grid[101])
    q = ladder.slope_tan_alpha(t, a, b - a)
    assert q == pytest.approx(2 * (t.phi1[101] - t.phi1[100]) / (b - a), rel=1e-12)


def test_substitution_constant_integrand(small_table):
    r = ladder.substitution_residual(lambda x: np.ones_like(x), small_table, 5e3, 200.0)
    assert r["residual"] <= 1e-10
    assert r["rhs"] == pytest.approx(r["phi_TU"] - r["phi_T"], rel=1e-12)


def test_substitution_zeta_integrand(small_table):
    assert ladder.substitution_identity_check(2.0, 1e4, 100.0, small_table) <= 1e-3
    assert ladder.substitution_identity_check(2.0, 1e4, 100.0, small_table, density="z_tilde_sq") <= 0.1


def test_substitution_constraint(small_table):
    with pytest.raises(ConstraintError):
        ladder.substitution_identity_check(2.0, 1e3, 500.0, small_table)


def test_windowed_density_agreement():
    table = ladder.build_table(1e5, 1e5 + 1e3 + 1, 4002)
    t = np.linspace(1e5, 1e5 + 1e3, 200_001)[1:-1]
    a = float(np.mean(ladder.z_tilde_sq_array(t)))
    b = float(np.mean(ladder.phi1_prime_array(table, t)))
    assert abs(a - b) <= 0.1 * b


def test_save_load_roundtrip(tmp_path, small_table):
    p = tmp_path / "t.tbl"
    ladder.save_table(small_table, str(p))
    back = ladder.load_table(str(p))
    assert back.grid.tobytes() == small_table.grid.tobytes()
    assert back.phi1.tobytes() == small_table.phi1.tobytes()
    assert back.build_cfg == small_table.build_cfg
    text = p.read_text().splitlines()
    assert text[0] == ladder.TABLE_MAGIC


def test_load_rejects_bad_files(tmp_path, small_table):
    p = tmp_path / "bad.tbl"
    p.write_text("not a table\n")
    with pytest.raises(TableFormatError):
        ladder.load_table(str(p))
    ladder.save_table(small_table, str(p))
    lines = p.read_text().splitlines()
    p.write_text("\n".join(lines[:-5]) + "\n")
    with pytest.raises(TableFormatError):
        ladder.load_table(str(p))
    with pytest.raises(TableFormatError):
        ladder.load_table(str(tmp_path / "missing.tbl"))


def test_config_text_roundtrip():
    cfg = ladder.QuadratureConfig(panel_scale=0.25, nodes_per_panel=10, c0_offset=1.5)
    assert ladder.QuadratureConfig.from_text(cfg.as_text()) == cfg
    assert cfg.digest() != ladder.DEFAULT_QUAD.digest()
    with pytest.raises(ConfigError):
        ladder.QuadratureConfig(panel_scale=1.5)
    with pytest.raises(ConfigError):
        ladder.QuadratureConfig(nodes_per_panel=3)
