import math

import numpy as np
import pytest

from zetaladder import aa, ladder, primes
from zetaladder.errors import ConstraintError, DomainError, RangeError


@pytest.fixture(scope="module")
def seq():
    return aa.k_sequence(1e4, 0.02, 50)


def test_sequence_recurrence(seq):
    K = seq.K
    assert K[0] == 1e4 and len(K) == 51
    assert all(K[i + 1] == K[i] + K[i] ** (1 / 3 + 0.04) for i in range(50))


def test_sequence_needs_table_range(small_table):
    with pytest.raises(RangeError, match="required t_max"):
        aa.k_sequence(1.1e4, 0.02, 50, small_table)


def test_sequence_domain():
    with pytest.raises(DomainError):
        aa.k_sequence(500.0)
    with pytest.raises(DomainError):
        aa.k_sequence(1e4, 0.5)


def test_residual_at_zero_is_minus_half(small_table):
    from zetaladder.zeta import hardy_z
    from scipy.optimize import brentq

    z = brentq(hardy_z, 5000.0, 5000.0 + 2.0) if hardy_z(5000.0) * hardy_z(5002.0) < 0 else None
    if z is None:
        ts = np.linspace(5000.0, 5003.0, 301)
        vals = [hardy_z(t) for t in ts]
        i = next(i for i in range(300) if vals[i] * vals[i + 1] < 0)
        z = brentq(hardy_z, ts[i], ts[i + 1], xtol=1e-14)
    assert aa.residual_R(2.0, z, small_table) == pytest.approx(-0.5, abs=1e-9)


def test_sigma0_precondition(aa_table, seq):
    with pytest.raises(DomainError, match="1.1"):
        aa.find_aa(0.9, 0, seq, aa_table)


def test_find_aa_first_interval(aa_table, seq):
    sol = aa.find_aa(2.0, 0, seq, aa_table)
    lo, hi = seq.interval(0)
    assert lo < sol.u_n < hi
    assert ladder.phi1(aa_table, lo) < sol.v_n < ladder.phi1(aa_table, hi)
    assert abs(sol.residual) <= 5 * math.log(math.log(1e4)) / math.log(1e4)
    assert sol.flag == ""


def test_refinement_never_worsens(aa_table, seq):
    sol = aa.find_aa(1.5, 3, seq, aa_table, grid_m=256)
    lo, hi = seq.interval(3)
    Rf = aa.ResidualFunction(1.5, aa_table)
    for m in (128, 256):
        xs = lo + (hi - lo) * np.arange(1, m + 1) / (m + 1)
        assert abs(sol.residual) <= float(np.min(np.abs(Rf(xs)))) + 1e-15


def test_reproducible(aa_table, seq):
    a = aa.find_aa(3.0, 7, seq, aa_table)
    b = aa.find_aa(3.0, 7, seq, aa_table)
    assert a == b


def test_envelope_miss_flag(aa_table, seq):
    sol = aa.find_aa(2.0, 1, seq, aa_table, A=1e-9)
    assert sol.flag == "envelope-miss"
    with pytest.raises(ConstraintError):
        aa.faraday_pair(sol)


def _fake(R, e_half=2.0):
    u = 1e4
    z2s = 1.0823232337111382
    e_sig = (R + 0.5) * z2s * math.log(u) / e_half
    return aa.AASolution(0, 2.0, u, u + 1, u, u - 10, R, 0.2, e_half * e_sig, e_half, e_sig, z2s)


def test_faraday_exact_zero_residual():
    fp = aa.faraday_pair(_fake(0.0))
    assert fp["residual_half"] == pytest.approx(0.0, abs=1e-15)
    assert fp["residual_sigma0"] == pytest.approx(0.0, abs=1e-15)


def test_faraday_bound_propagates():
    fp = aa.faraday_pair(_fake(0.1))
    assert fp["bound"] == pytest.approx(0.5)
    assert fp["residual_half"] <= 0.5 and fp["residual_half"] == pytest.approx(0.2, rel=1e-12)


def test_segment_distance(aa_table, seq):
    pc = primes.build_counter(20000)
    rho, pred, flag = aa.segment_distance(0, seq, aa_table, pc)
    assert rho == seq.K[0] - ladder.phi1(aa_table, seq.K[1])
    assert flag == "" and 0.7 <= rho / pred <= 1.4


def test_run_aa_jobs_invariant(aa_table):
    seq = aa.k_sequence(1e4, 0.02, 6)
    pc = primes.build_counter(20000)
    a = aa.run_aa(2.0, seq, aa_table, pc, jobs=1)
    b = aa.run_aa(2.0, seq, aa_table, pc, jobs=3)
    assert [r.csv_fields() for r in a] == [r.csv_fields() for r in b]
    assert [r.sol.n for r in a] == list(range(6))


def test_chain_identity_and_witness(aa_table):
    rep = aa.verify_chain(2.0, 1e4, aa_table)
    assert rep.identity_residual <= 1e-3
    assert rep.witness_discrepancy <= 1e-3
    assert 1e4 < rep.xi2 < 1e4 + rep.U0
    # any two points of the interval have ln-ratio within U0 / T
    assert math.log(rep.xi2) / math.log(1e4) - 1 <= rep.U0 / 1e4
