"""Interval sequences K_n and the search for asymptotic solutions.

For sigma0 > 1 the residual at xi is

    R(xi) = |zeta(1/2 + i xi)|^2 |zeta(sigma0 + i phi1(xi))|^2 / (zeta(2 sigma0) ln xi) - 1/2,

and an approximate solution on (K_n, K_{n+1}) is a point u_n with |R(u_n)|
within A * ln ln K_n / ln K_n.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import ConstraintError, DomainError, RangeError
from .ladder import (
    T0_LADDER,
    LadderTable,
    _check_domain,
    phi1,
    phi1_array,
    substitution_residual,
)
from .mvt import ALPHA_DEFAULT
from .primes import PrimeCounter, expected_drift
from .zeta import EvalConfig, abs_zeta_sq_array, zeta_two_sigma

ENVELOPE_CONST = 5.0  # A in |R| <= A ln ln K / ln K, also the 1/ln T constant
GRID_M = 512
GOLDEN_XTOL = 1e-6
EPS_DEFAULT = 0.02
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class IntervalSeq:
    T: float
    epsilon: float
    K: tuple
    N: int

    @property
    def exponent(self) -> float:
        return 1.0 / 3.0 + 2.0 * self.epsilon

    def interval(self, n: int) -> tuple[float, float]:
        if not 0 <= n < self.N:
            raise RangeError(f"interval index {n} outside 0..{self.N - 1}")
        return self.K[n], self.K[n + 1]


def k_sequence(T: float, epsilon: float = EPS_DEFAULT, N: int = 50, table: LadderTable | None = None) -> IntervalSeq:
    """K_0 = T, K_{n+1} = K_n + K_n^(1/3 + 2 epsilon)."""
    T = float(T)
    epsilon = float(epsilon)
    N = int(N)
    if T < T0_LADDER:
        raise DomainError(f"T must be >= {T0_LADDER:g}, got {T:g}")
    if not (0.0 < epsilon <= 0.1):
        raise DomainError(f"epsilon must lie in (0, 0.1], got {epsilon}")
    if N < 0:
        raise DomainError("N must be >= 0")
    e = 1.0 / 3.0 + 2.0 * epsilon
    K = [T]
    for _ in range(N):
        K.append(K[-1] + K[-1] ** e)
    if table is not None and (K[0] < table.t_min or K[-1] > table.t_max):
        raise RangeError(
            f"K_N = {K[-1]:.6f} needs a ladder table covering [{K[0]:g}, {K[-1]:.6f}]; "
            f"table is [{table.t_min:g}, {table.t_max:g}] (required t_max >= {math.ceil(K[-1])})"
        )
    return IntervalSeq(T, epsilon, tuple(K), N)


def required_t_max(T: float, epsilon: float, N: int) -> float:
    return k_sequence(T, epsilon, N).K[-1]


@dataclass(frozen=True)
class AASolution:
    n: int
    sigma0: float
    K_n: float
    K_n1: float
    u_n: float
    v_n: float
    residual: float
    envelope: float
    product_lhs: float
    energy_half: float
    energy_sigma0: float
    zeta2sigma0: float
    flag: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def _check_sigma0(sigma0: float) -> None:
    if not sigma0 >= ALPHA_DEFAULT:
        raise DomainError(f"sigma0 must be >= {ALPHA_DEFAULT}, got {sigma0}")


class ResidualFunction:
    """R(xi) for a fixed sigma0 and ladder table; scalar or vectorized."""

    def __init__(self, sigma0: float, table: LadderTable, cfg: EvalConfig | None = None):
        sigma0 = float(sigma0)
        _check_sigma0(sigma0)
        self.sigma0 = sigma0
        self.table = table
        self.cfg = cfg or EvalConfig()
        self.z2s = zeta_two_sigma(sigma0)

    def parts(self, xi) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(|zeta(1/2+i xi)|^2, |zeta(sigma0+i phi1(xi))|^2, phi1(xi))."""
        xi = np.asarray(xi, dtype=float)
        if xi.size and float(xi.min()) < T0_LADDER:
            raise DomainError(f"xi must be >= {T0_LADDER:g}")
        v = phi1_array(self.table, xi)
        e_half = abs_zeta_sq_array(0.5, xi, self.cfg)
        e_sig = abs_zeta_sq_array(self.sigma0, v, self.cfg)
        return e_half, e_sig, v

    def __call__(self, xi):
        xi = np.asarray(xi, dtype=float)
        e_half, e_sig, _ = self.parts(xi)
        return e_half * e_sig / (self.z2s * np.log(xi)) - 0.5

    def scalar(self, xi: float) -> float:
        return float(self(np.array([float(xi)]))[0])


def residual_R(sigma0: float, xi: float, table: LadderTable, cfg: EvalConfig | None = None) -> float:
    """R(xi); equals -1/2 exactly where Z(xi) = 0."""
    return ResidualFunction(sigma0, table, cfg).scalar(xi)


def envelope(K: float) -> float:
    return math.log(math.log(K)) / math.log(K)


def golden_min(f, a: float, b: float, xtol: float = GOLDEN_XTOL) -> tuple[float, float]:
    """Golden-section minimization of f on [a, b]; returns (x, f(x))."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def find_aa(sigma0: float, n: int, seq: IntervalSeq, table: LadderTable, grid_m: int = GRID_M,
            A: float = ENVELOPE_CONST, cfg: EvalConfig | None = None, xtol: float = GOLDEN_XTOL) -> AASolution:
    """Grid scan of R on (K_n, K_{n+1}) then golden-section refinement of |R|."""
    if grid_m < 128:
        raise DomainError(f"grid_m must be >= 128, got {grid_m}")
    lo, hi = seq.interval(n)
    _check_domain(table, np.array([lo, hi]))
    Rf = ResidualFunction(sigma0, table, cfg)
    xs = lo + (hi - lo) * np.arange(1, grid_m + 1) / (grid_m + 1)
    vals = np.abs(Rf(xs))
    i = int(np.argmin(vals))
    best_x, best_r = float(xs[i]), float(vals[i])
    a = float(xs[i - 1]) if i > 0 else lo + 0.5 * (xs[0] - lo)
    b = float(xs[i + 1]) if i + 1 < grid_m else hi - 0.5 * (hi - xs[-1])
    gx, gr = golden_min(lambda x: abs(Rf.scalar(x)), a, b, xtol)
    if gr < best_r:
        best_x, best_r = gx, gr
    e_half, e_sig, v = (float(q[0]) for q in Rf.parts(np.array([best_x])))
    R = e_half * e_sig / (Rf.z2s * math.log(best_x)) - 0.5
    env = envelope(lo)
    flag = "" if abs(R) <= A * env else "envelope-miss"
    return AASolution(n, Rf.sigma0, lo, hi, best_x, v, R, env, e_half * e_sig, e_half, e_sig, Rf.z2s, flag)


def segment_distance(n: int, seq: IntervalSeq, table: LadderTable, pc: PrimeCounter) -> tuple[float, float, str]:
    """(rho, predicted, flag): rho = K_n - phi1(K_{n+1}), predicted = (1-c) pi(K_n)."""
    lo, hi = seq.interval(n)
    rho = lo - phi1(table, hi)
    flag = "" if rho > 0 else "overlap"
    return rho, expected_drift(pc, lo), flag


def faraday_pair(sol: AASolution) -> dict:
    """Reciprocal energy estimates on the two lines and their relative residuals.

    The estimate for the 1/2 line is zeta(2 sigma0) ln u / (2 |zeta(sigma0+iv)|^2)
    and symmetrically for the sigma0 line; both relative residuals equal 2|R|.
    """
    if sol.flag == "envelope-miss":
        raise ConstraintError("faraday_pair needs a solution inside its envelope")
    scale = sol.zeta2sigma0 * math.log(sol.u_n)
    est_half = scale / (2.0 * sol.energy_sigma0)
    est_sigma = scale / (2.0 * sol.energy_half)
    res_half = abs(sol.energy_half - est_half) / est_half
    res_sigma = abs(sol.energy_sigma0 - est_sigma) / est_sigma
    r = abs(sol.residual)
    bound = 2.0 * r / (0.5 - r) if r < 0.5 else math.inf
    return {
        "energy_half_line": sol.energy_half,
        "energy_half_estimate": est_half,
        "energy_sigma0_line": sol.energy_sigma0,
        "energy_sigma0_estimate": est_sigma,
        "residual_half": res_half,
        "residual_sigma0": res_sigma,
        "bound": bound,
    }


@dataclass(frozen=True)
class AARow:
    sol: AASolution
    rho: float
    predicted_rho: float
    flag: str

    def csv_fields(self) -> list:
        s = self.sol
        return [s.n, s.K_n, s.K_n1, s.u_n, s.v_n, s.residual, s.envelope, self.rho, self.predicted_rho, self.flag]


CSV_COLUMNS = ["n", "K_n", "K_n1", "u_n", "v_n", "residual", "envelope", "rho", "predicted_rho", "flag"]


def run_aa(sigma0: float, seq: IntervalSeq, table: LadderTable, pc: PrimeCounter, grid_m: int = GRID_M,
           A: float = ENVELOPE_CONST, jobs: int = 1, cfg: EvalConfig | None = None) -> list[AARow]:
    """find_aa and segment_distance for every interval; rows ordered by n."""
    _check_sigma0(float(sigma0))
    _check_domain(table, np.array([seq.K[0], seq.K[-1]]))

    def work(n: int) -> AARow:
        sol = find_aa(sigma0, n, seq, table, grid_m, A, cfg)
        rho, pred, sflag = segment_distance(n, seq, table, pc)
        flag = "|".join(f for f in (sol.flag, sflag) if f)
        return AARow(sol, rho, pred, flag)

    if jobs <= 1:
        return [work(n) for n in range(seq.N)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(work, range(seq.N)))


# ---------------------------------------------------------------------------
# the mean-value chain on [T, T + U0]


@dataclass(frozen=True)
class ChainReport:
    sigma0: float
    T: float
    U0: float
    identity_lhs: float
    identity_rhs: float
    identity_residual: float
    rhs_ratio: float
    rhs_deviation: float
    rhs_bound: float
    weighted_mean: float
    xi2: float
    witness_discrepancy: float
    final_ratio: float
    final_deviation: float
    final_bound: float
    tan_alpha: float

    def as_dict(self) -> dict:
        return asdict(self)

    def checks(self) -> dict:
        return {
            "identity": self.identity_residual <= 1e-3,
            "rhs": self.rhs_deviation <= self.rhs_bound,
            "witness": self.witness_discrepancy <= 1e-3,
            "final": self.final_deviation <= self.final_bound,
        }


def verify_chain(sigma0: float, T: float, table: LadderTable, epsilon: float = EPS_DEFAULT,
                 cfg: EvalConfig | None = None, grid_m: int = 2048) -> ChainReport:
    """Check the four steps of the mean-value chain on [T, T + T^(1/3+2 eps)].

    (i) change of variables with the table derivative as density; (ii) the
    ratio of the right side to zeta(2 sigma0) U0 / 2; (iii) a point xi2 where
    |zeta(sigma0 + i phi1)|^2 |zeta(1/2 + i t)|^2 equals its mean on the
    interval (sign change of integrand - mean, then Brent); (iv) R(xi2).
    """
    sigma0 = float(sigma0)
    _check_sigma0(sigma0)
    T = float(T)
    ecfg = cfg or EvalConfig()
    U0 = T ** (1.0 / 3.0 + 2.0 * epsilon)
    _check_domain(table, np.array([T, T + U0]))
    z2s = zeta_two_sigma(sigma0)
    f = lambda x: abs_zeta_sq_array(sigma0, x, ecfg)  # noqa: E731
    ident = substitution_residual(f, table, T, U0, "phi1_prime")
    rhs_ratio = ident["rhs"] / (0.5 * z2s * U0)

    Rf = ResidualFunction(sigma0, table, ecfg)

    def integrand(t):
        e_half, e_sig, _ = Rf.parts(t)
        return e_half * e_sig

    # mean of the integrand on panels a quarter of the mean zero gap wide
    width = 0.25 * 2.0 * math.pi / math.log(T + U0)
    m = max(1, int(math.ceil(U0 / width)))
    x, w = np.polynomial.legendre.leggauss(16)
    h = U0 / m
    nodes = (T + (np.arange(m) + 0.5) * h)[:, None] + 0.5 * h * x[None, :]
    vals = integrand(nodes.ravel()).reshape(nodes.shape)
    mean = float(np.sum(0.5 * h * (vals @ w))) / U0

    grid = T + U0 * np.arange(1, grid_m + 1) / (grid_m + 1)
    g = integrand(grid) - mean
    idx = np.flatnonzero(np.sign(g[:-1]) * np.sign(g[1:]) < 0)
    if idx.size == 0:
        xi2 = float(grid[int(np.argmin(np.abs(g)))])
    else:
        j = int(idx[0])
        xi2 = brentq(lambda s: float(integrand(np.array([s]))[0]) - mean, grid[j], grid[j + 1], xtol=1e-12)
    h_xi2 = float(integrand(np.array([xi2]))[0])
    discrepancy = abs(h_xi2 - mean) / mean
    final = h_xi2 / (z2s * math.log(xi2))
    tan_alpha = 2.0 * (ident["phi_TU"] - ident["phi_T"]) / U0
    return ChainReport(
        sigma0, T, U0, ident["lhs"], ident["rhs"], ident["residual"],
        rhs_ratio, abs(rhs_ratio - 1.0), ENVELOPE_CONST / math.log(T),
        mean, xi2, discrepancy, final, abs(final - 0.5), ENVELOPE_CONST * envelope(T), tan_alpha,
    )
