import pytest
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaladder import primes
from zetaladder.errors import ConfigError, DomainError, RangeError


@pytest.fixture(scope="module")
def pc():
    return primes.build_counter(10**6)


def test_known_counts(pc):
    assert [pc.pi(x) for x in (0, 1, 2, 3, 10, 100, 1000, 10**4, 10**5, 10**6)] == [
        0, 0, 1, 2, 4, 25, 168, 1229, 9592, 78498]


def test_floor_of_real_argument(pc):
    assert primes.prime_pi(pc, 10.99) == 4
    assert primes.prime_pi(pc, 11.0) == 5


def test_segment_boundaries(pc):
    # counts straddling segment and block edges match trial division
    for x in (primes.SEGMENT - 1, primes.SEGMENT, primes.SEGMENT + 1, 8 * primes.BLOCK_BYTES * 7 + 3):
        lo = x - 200
        seg = sum(1 for n in range(lo + 1, x + 1) if n > 1 and all(n % d for d in range(2, int(n**0.5) + 1)))
        assert pc.pi(x) - pc.pi(lo) == seg


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 3000))
def test_against_trial_division(x):
    pc = primes.build_counter(3000)
    assert primes.prime_pi(pc, x) == primes.trial_division_pi(x)


def test_monotone(pc):
    xs = np.arange(0, 5000)
    vals = [pc.pi(int(x)) for x in xs]
    assert all(b - a in (0, 1) for a, b in zip(vals, vals[1:]))


def test_errors(pc):
    with pytest.raises(RangeError):
        pc.pi(10**6 + 1)
    with pytest.raises(DomainError):
        pc.pi(-1)
    with pytest.raises(ConfigError):
        primes.build_counter(1)


def test_expected_drift(pc):
    assert primes.expected_drift(pc, 1e6) == pytest.approx(0.4227843351 * 78498, rel=1e-10)
