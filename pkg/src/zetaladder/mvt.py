"""Local mean values of |zeta(sigma+it)|^2 on sigma > 1 and the bound sums.

The integral of |zeta|^2 over [T, T+U] is computed on equal Gauss-Legendre
panels.  Values at the nodes come from the Dirichlet polynomial kernel plus
the Abel-Plana tail.  The panel width starts near ``width_factor / ln N`` (N
the series length, so ln N bounds the highest frequency of |zeta|^2) and is
halved until two successive widths agree to ``abs_tol * U``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import _backend
from .errors import ConfigError, DomainError, NonConvergence
from .zeta import EvalConfig, abel_plana_tail, choose_terms, zeta_two_sigma

ALPHA_DEFAULT = 1.1
ENVELOPE_SLACK = 4.0
BOUND_NMAX = 1000  # n_max of the truncated S1 used in the per-entry bound


@dataclass(frozen=True)
class MVTConfig:
    """Panel policy for integrals of |zeta(sigma+it)|^2."""

    nodes_per_panel: int = 16
    width_factor: float = 30.0
    abs_tol: float = 1e-6
    max_halvings: int = 5
    eval_tol: float = 1e-10
    alpha: float = ALPHA_DEFAULT

    def __post_init__(self):
        if self.nodes_per_panel < 4 or self.nodes_per_panel > 64:
            raise ConfigError("nodes_per_panel must lie in [4, 64]")
        if not self.width_factor > 0:
            raise ConfigError("width_factor must be positive")
        if not self.abs_tol > 0:
            raise ConfigError("abs_tol must be positive")
        if self.max_halvings < 1:
            raise ConfigError("max_halvings must be >= 1")
        if not self.alpha > 1.0:
            raise ConfigError("alpha must exceed 1")


DEFAULT_MVT = MVTConfig()


@dataclass(frozen=True)
class MVTEntry:
    sigma: float
    T: float
    U: float
    integral: float
    zeta2sigma: float
    residual: float
    panels: int
    bound: float

    @property
    def relative_residual(self) -> float:
        return abs(self.residual) / (self.zeta2sigma * self.U)


@dataclass(frozen=True)
class MVTReport:
    entries: tuple
    max_abs_residual: float
    trend_slope: float

    def lnln_entries(self) -> list:
        """Entries with U >= ln ln T."""
        return [e for e in self.entries if e.U >= math.log(math.log(e.T)) * (1 - 1e-12)]

    def max_lnln_relative(self) -> float:
        r4 = self.lnln_entries()
        return max((e.relative_residual for e in r4), default=0.0)

    def within_bounds(self) -> bool:
        return all(abs(e.residual) <= e.bound for e in self.entries)


def _abs_sq_panels(sigma: float, T: float, h: float, npan: int, x: np.ndarray, N: int, with_tail: bool) -> np.ndarray:
    if with_tail:
        z = _backend.dirichlet_grid(T, h, npan, x, sigma, N - 1)
        nodes = _backend.panel_nodes(T, h, npan, x)
        z = z + abel_plana_tail(sigma, nodes, N)
    else:
        z = _backend.dirichlet_grid(T, h, npan, x, sigma, N)
    return z.real**2 + z.imag**2


def integrate_abs_sq(sigma: float, T: float, U: float, cfg: MVTConfig = DEFAULT_MVT) -> tuple[float, int]:
    """int_T^{T+U} |zeta(sigma+it)|^2 dt and the final panel count."""
    sigma, T, U = float(sigma), float(T), float(U)
    if not U > 0:
        raise DomainError(f"U must be positive, got {U}")
    if not T >= 0:
        raise DomainError(f"T must be nonnegative, got {T}")
    ecfg = EvalConfig(tol=cfg.eval_tol)
    N, with_tail = choose_terms(sigma, T + U, ecfg)
    x, w = np.polynomial.legendre.leggauss(cfg.nodes_per_panel)
    h0 = cfg.width_factor / math.log(max(N, 3))
    npan = max(1, int(math.ceil(U / h0)))

    def rule(m: int) -> float:
        h = U / m
        vals = _abs_sq_panels(sigma, T, h, m, x, N, with_tail)
        return float(np.sum((0.5 * h) * (vals @ w)))

    prev = rule(npan)
    for _ in range(cfg.max_halvings):
        npan *= 2
        cur = rule(npan)
        if abs(cur - prev) <= cfg.abs_tol * U:
            return cur, npan
        prev = cur
    raise NonConvergence(
        "panel halving did not converge",
        {"sigma": sigma, "T": T, "U": U, "panels": npan, "last_change": abs(cur - prev)},
    )


def local_mean_value(sigma: float, T: float, U: float, cfg: MVTConfig = DEFAULT_MVT) -> tuple[float, float]:
    """(integral, integral - zeta(2 sigma) U) over [T, T+U], sigma >= alpha."""
    e = mean_value_entry(sigma, T, U, cfg)
    return e.integral, e.residual


def mean_value_entry(sigma: float, T: float, U: float, cfg: MVTConfig = DEFAULT_MVT) -> MVTEntry:
    sigma = float(sigma)
    if sigma < cfg.alpha:
        raise DomainError(f"sigma must be >= alpha = {cfg.alpha}, got {sigma}")
    integral, npan = integrate_abs_sq(sigma, T, U, cfg)
    z2 = zeta_two_sigma(sigma)
    bound = s1_bound(sigma, BOUND_NMAX) + s2_envelope(sigma) + cfg.abs_tol * U
    return MVTEntry(sigma, float(T), float(U), integral, z2, integral - z2 * U, npan, bound)


def exact_polynomial_mean(sigma: float, T: float, U: float, M: int) -> float:
    """Closed form of int_T^{T+U} |sum_{n<=M} n^-(sigma+it)|^2 dt.

    Pairs (m, n) contribute (mn)^-sigma (sin(l (T+U)) - sin(l T)) / l with
    l = ln(n/m); diagonal pairs contribute n^-2sigma U.
    """
    n = np.arange(1, M + 1, dtype=float)
    a = n ** (-sigma)
    ln = np.log(n)
    total = float(np.sum(a * a)) * U
    for m in range(1, M):
        lam = ln[m:] - ln[m - 1]
        part = (np.sin(lam * (T + U)) - np.sin(lam * T)) / lam
        total += 2.0 * a[m - 1] * float(np.dot(a[m:], part))
    return total


# ---------------------------------------------------------------------------
# the bound sums


def _check_bound_args(sigma: float, n_max: int) -> None:
    if not sigma > 1.0:
        raise DomainError(f"sigma must exceed 1, got {sigma}")
    if n_max < 4:
        raise DomainError(f"n_max must be >= 4, got {n_max}")


def s1_bound(sigma: float, n_max: int) -> float:
    """sum_{n<=n_max} sum_{m<n/2} (mn)^-sigma."""
    sigma = float(sigma)
    n_max = int(n_max)
    _check_bound_args(sigma, n_max)
    a = np.arange(1, n_max + 1, dtype=float) ** (-sigma)
    prefix = np.concatenate(([0.0], np.cumsum(a)))
    n = np.arange(1, n_max + 1)
    # m < n/2  <=>  m <= (n - 1) // 2
    return float(np.sum(a * prefix[(n - 1) // 2]))


def s1_limit(sigma: float) -> float:
    """(1 + 1/(sigma-1))^2, the bound on S1."""
    return (1.0 + 1.0 / (sigma - 1.0)) ** 2


def s2_bound(sigma: float, n_max: int) -> float:
    """sum_{n<=n_max} sum_{1<=r<n/2} n / ((n-r) n)^sigma / r."""
    sigma = float(sigma)
    n_max = int(n_max)
    _check_bound_args(sigma, n_max)
    a = np.arange(0, n_max + 1, dtype=float)
    a[1:] = a[1:] ** (-sigma)
    inv_r = np.zeros(n_max + 1)
    inv_r[1:] = 1.0 / np.arange(1, n_max + 1)
    total = 0.0
    for n in range(3, n_max + 1):
        R = (n - 1) // 2  # r < n/2
        # m = n - r runs from n-1 down to n-R
        inner = float(np.dot(a[n - 1 : n - R - 1 : -1], inv_r[1 : R + 1]))
        total += n ** (1.0 - sigma) * inner
    return total


def s2_majorant(sigma: float) -> float:
    """ln2/2^(2s-1) + 2^(1-2s) ln2/(s-1) + 2^(-2s)/(s-1)^2."""
    s = float(sigma)
    l2 = math.log(2.0)
    return l2 / 2 ** (2 * s - 1) + 2 ** (1 - 2 * s) * l2 / (s - 1) + 2 ** (-2 * s) / (s - 1) ** 2


def s2_envelope(sigma: float, slack: float = ENVELOPE_SLACK) -> float:
    """slack * 2^sigma * s2_majorant(sigma)."""
    return slack * 2.0**sigma * s2_majorant(sigma)


def full_kernel_sum(sigma: float, n_max: int) -> float:
    """sum_{n<=n_max} sum_{m<n} 1 / ((mn)^sigma ln(n/m))."""
    sigma = float(sigma)
    _check_bound_args(sigma, n_max)
    a = np.arange(1, n_max + 1, dtype=float) ** (-sigma)
    ln = np.log(np.arange(1, n_max + 1, dtype=float))
    total = 0.0
    for n in range(2, n_max + 1):
        total += a[n - 1] * float(np.sum(a[: n - 1] / (ln[n - 1] - ln[: n - 1])))
    return total


def doubling_change(fn, sigma: float, n_max: int) -> float:
    """Relative change of a bound sum when n_max doubles."""
    v1 = fn(sigma, n_max)
    v2 = fn(sigma, 2 * n_max)
    return abs(v2 - v1) / abs(v1)


@dataclass(frozen=True)
class BoundReport:
    sigma: float
    n_max: int
    s1: float
    s1_limit: float
    s1_doubling_change: float
    s2: float
    s2_envelope: float
    s2_doubling_change: float

    def as_dict(self) -> dict:
        return asdict(self)


def bound_report(sigma: float, n_max: int) -> BoundReport:
    s1a, s1b = s1_bound(sigma, n_max), s1_bound(sigma, 2 * n_max)
    s2a, s2b = s2_bound(sigma, n_max), s2_bound(sigma, 2 * n_max)
    return BoundReport(
        float(sigma), int(n_max), s1a, s1_limit(sigma), abs(s1b - s1a) / s1a,
        s2a, s2_envelope(sigma), abs(s2b - s2a) / s2a,
    )


# ---------------------------------------------------------------------------
# scans


def resolve_U(U, T: float) -> float:
    """U values may be numbers or the token "lnln" (U = ln ln T)."""
    if isinstance(U, str):
        if U == "lnln":
            return math.log(math.log(T))
        return float(U)
    return float(U)


def trend_slope(entries) -> float:
    """Least-squares slope of |residual| against ln T."""
    if len(entries) < 2:
        return 0.0
    x = np.array([math.log(e.T) for e in entries])
    y = np.array([abs(e.residual) for e in entries])
    if np.ptp(x) == 0:
        return 0.0
    return float(np.polyfit(x, y, 1)[0])


def uniformity_scan(sigmas, T_grid, U_grid, cfg: MVTConfig = DEFAULT_MVT, jobs: int = 1) -> MVTReport:
    """Residuals of the local mean value over every (sigma, T, U) combination."""
    sigmas = [float(s) for s in sigmas]
    T_grid = [float(t) for t in T_grid]
    U_grid = list(U_grid)
    if not sigmas or not T_grid or not U_grid:
        raise ConfigError("uniformity_scan needs every grid (sigma, T, U) nonempty")
    for s in sigmas:
        if s < cfg.alpha:
            raise DomainError(f"sigma must be >= alpha = {cfg.alpha}, got {s}")
    jobs_list = sorted({(s, T, resolve_U(U, T)) for s in sigmas for T in T_grid for U in U_grid})

    def work(item):
        return mean_value_entry(item[0], item[1], item[2], cfg)

    # largest jobs first keeps workers busy; order of results is restored below
    order = sorted(range(len(jobs_list)), key=lambda i: -jobs_list[i][1] * jobs_list[i][2])
    if jobs <= 1:
        results = {i: work(jobs_list[i]) for i in order}
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futs = {i: pool.submit(work, jobs_list[i]) for i in order}
            results = {i: f.result() for i, f in futs.items()}
    entries = tuple(results[i] for i in range(len(jobs_list)))
    max_abs = max(abs(e.residual) for e in entries)
    return MVTReport(entries, max_abs, trend_slope(entries))


def log_grid(spec: str) -> list[float]:
    """Parse "a:b:logK" into K log-spaced values from a to b inclusive."""
    try:
        a, b, tail = spec.split(":")
        if not tail.startswith("log"):
            raise ValueError
        k = int(tail[3:])
        lo, hi = float(a), float(b)
    except ValueError as exc:
        raise ConfigError(f"bad grid {spec!r}; expected a:b:logK") from exc
    if k < 1 or not (0 < lo <= hi):
        raise ConfigError(f"bad grid {spec!r}")
    if k == 1:
        return [lo]
    vals = np.exp(np.linspace(math.log(lo), math.log(hi), k))
    # snap to round values when the endpoints are powers of ten
    return [float(f"{v:.12g}") for v in vals]
