"""Numerics for Hardy's Z and the Jacob's ladder phi1, with mean values of zeta on sigma > 1."""

from ._backend import COMPILED
from ._backend import NAME as BACKEND
from .aa import (
    AASolution,
    IntervalSeq,
    faraday_pair,
    find_aa,
    k_sequence,
    residual_R,
    run_aa,
    segment_distance,
    verify_chain,
)
from .errors import (
    ConfigError,
    ConstraintError,
    DomainError,
    NonConvergence,
    PoleError,
    RangeError,
    SeriesInfeasible,
    TableFormatError,
    ZetaLadderError,
)
from .ladder import (
    LadderTable,
    QuadratureConfig,
    Z2Quadrature,
    build_table,
    integrate_z_squared,
    load_table,
    phi1,
    phi1_prime,
    save_table,
    slope_tan_alpha,
    solve_ladder,
    substitution_identity_check,
    z_tilde_sq,
)
from .mvt import MVTConfig, MVTReport, local_mean_value, s1_bound, s2_bound, uniformity_scan
from .primes import PrimeCounter, build_counter, expected_drift, prime_pi
from .zeta import (
    EvalConfig,
    ZetaSample,
    abs_zeta_sq,
    hardy_z,
    zeta_dirichlet,
    zeta_em,
    zeta_two_sigma,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
