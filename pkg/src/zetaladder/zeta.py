"""Evaluators for zeta(sigma + it) and Hardy's Z(t).

Three routes are provided:

* ``hardy_z``: Riemann-Siegel main sum plus the asymptotic remainder, for
  t >= 2 on the critical line.
* ``zeta_dirichlet``: the Dirichlet series for sigma > 1.  Short series are
  truncated by the integral tail bound; long ones are cut at
  N ~ 1.5 |t| / 2 pi and the tail is summed exactly by the Abel-Plana formula.
* ``zeta_em``: Euler-Maclaurin summation, valid for any sigma > 0.  This is
  the independent oracle for the other two.

Negative t is handled by conjugation, so |zeta(sigma - it)| equals
|zeta(sigma + it)| bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import _backend
from ._series import EM_WEIGHTS
from .errors import ConfigError, DomainError, NonConvergence, PoleError, SeriesInfeasible

TWO_PI = 2.0 * math.pi
SIGMA_MIN_SERIES = 1.0 + 1e-6  # below this the Dirichlet route refuses
HARDY_T_MIN = 2.0
HARDY_RS_MIN = 20.0  # below this Z(t) comes from Euler-Maclaurin (RS error > 1e-15)

# Abel-Plana tail: cut the series at N = ceil(AP_RATIO |t| / 2pi) + AP_PAD and
# integrate over y in [0, Y] on unit panels with AP_NODES Gauss points each.
AP_RATIO = 1.5
AP_PAD = 20
AP_NODES = 16
_AP_X, _AP_W = np.polynomial.legendre.leggauss(AP_NODES)
_AP_X8, _AP_W8 = np.polynomial.legendre.leggauss(AP_NODES // 2)
# panel-count belt: integrand below ~1e-18 of its scale past Y
_AP_LOG_FLOOR = 41.5
# pure truncation is used whenever it needs fewer than N_ap + this many terms
_PURE_MARGIN = 2000


@dataclass(frozen=True)
class EvalConfig:
    """Tolerance policy shared by the evaluators."""

    tol: float = 1e-10
    max_terms: int = 10_000_000

    def __post_init__(self):
        if not (self.tol > 0.0):
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.max_terms < 10:
            raise ConfigError(f"max_terms must be >= 10, got {self.max_terms}")


DEFAULT_EVAL = EvalConfig()


@dataclass(frozen=True)
class ZetaSample:
    sigma: float
    t: float
    value_re: float
    value_im: float
    abs_sq: float
    method: str = ""
    terms: int = 0
    err_est: float = 0.0

    @property
    def value(self) -> complex:
        return complex(self.value_re, self.value_im)

    def to_dict(self) -> dict:
        return asdict(self)


def _sample(sigma: float, t: float, z: complex, method: str, terms: int, err: float) -> ZetaSample:
    if t < 0:
        z = z.conjugate()
    re, im = float(z.real), float(z.imag)
    return ZetaSample(float(sigma), float(t), re, im, re * re + im * im, method, int(terms), float(err))


# ---------------------------------------------------------------------------
# Euler-Maclaurin


def _em_value(s: complex, tol: float, max_terms: int) -> tuple[complex, int, float]:
    """zeta(s) by Euler-Maclaurin; returns (value, N, last correction size)."""
    N = max(20, int(abs(s) / math.pi) + 10)
    while True:
        if N > max_terms:
            raise SeriesInfeasible(f"Euler-Maclaurin needs N={N} > max_terms={max_terms}")
        n = np.arange(1, N, dtype=float)
        total = complex(np.sum(np.exp(-s * np.log(n))))
        lnN = math.log(N)
        Ns = complex(np.exp(-s * lnN))
        total += N * Ns / (s - 1.0) + 0.5 * Ns
        poch = s
        fac = Ns / N
        prev = math.inf
        for k in range(1, len(EM_WEIGHTS) + 1):
            term = EM_WEIGHTS[k - 1] * poch * fac
            total += term
            size = abs(term)
            # stop with a 100x margin below the requested relative tolerance
            if size <= 1e-2 * tol * abs(total) or size == 0.0:
                return total, N, size
            if size > prev:
                break  # asymptotic series turned; retry with a longer head
            prev = size
            poch *= (s + 2 * k - 1) * (s + 2 * k)
            fac /= N * N
        N *= 2


def zeta_em(sigma: float, t: float, cfg: EvalConfig = DEFAULT_EVAL) -> ZetaSample:
    """zeta(sigma + it) by Euler-Maclaurin summation, sigma > 0."""
    sigma = float(sigma)
    t = float(t)
    if not sigma > 0.0:
        raise DomainError(f"zeta_em needs sigma > 0, got {sigma}")
    if sigma == 1.0 and t == 0.0:
        raise PoleError("zeta has a pole at s = 1")
    z, N, err = _em_value(complex(sigma, abs(t)), cfg.tol, cfg.max_terms)
    return _sample(sigma, t, z, "euler-maclaurin", N, err)


def _zeta_real(x: float) -> float:
    return _em_value(complex(x, 0.0), 1e-15, 10_000_000)[0].real


def zeta_two_sigma(sigma: float) -> float:
    """zeta(2 sigma) for real sigma > 1."""
    sigma = float(sigma)
    if not sigma > 1.0:
        raise DomainError(f"zeta_two_sigma needs sigma > 1, got {sigma}")
    return _zeta_real(2.0 * sigma)


# ---------------------------------------------------------------------------
# Dirichlet series


def _abs_lower_bound(sigma: float) -> float:
    # |zeta(s)| >= zeta(2 sigma) / zeta(sigma) on Re s = sigma > 1
    return _zeta_real(2.0 * sigma) / _zeta_real(sigma)


def pure_truncation_terms(sigma: float, tol: float) -> float:
    """Smallest N with N^(1-sigma)/(sigma-1) <= tol * (lower bound of |zeta|).

    Returned as a float because it overflows any integer type near sigma = 1.
    """
    bound = tol * _abs_lower_bound(sigma) * (sigma - 1.0)
    logN = -math.log(bound) / (sigma - 1.0)
    return math.exp(min(logN, 700.0))


def tail_cut(t_abs: float) -> int:
    """Series cut used with the Abel-Plana tail at height |t|."""
    return int(math.ceil(AP_RATIO * t_abs / TWO_PI)) + AP_PAD


def choose_terms(sigma: float, t_abs: float, cfg: EvalConfig) -> tuple[int, bool]:
    """(N, with_tail): the series length for height up to ``t_abs``.

    With ``with_tail`` false the partial sum over n <= N alone meets the tail
    bound; otherwise terms n < N are summed and the rest by Abel-Plana.
    """
    if sigma < SIGMA_MIN_SERIES:
        raise SeriesInfeasible(
            f"Dirichlet series needs sigma >= {SIGMA_MIN_SERIES}, got {sigma}"
        )
    n_pure = pure_truncation_terms(sigma, cfg.tol)
    n_tail = tail_cut(t_abs)
    if n_pure <= n_tail + _PURE_MARGIN and n_pure <= cfg.max_terms:
        return int(math.ceil(n_pure)), False
    if n_tail > cfg.max_terms:
        raise SeriesInfeasible(
            f"height |t|={t_abs:g} needs {n_tail} terms > max_terms={cfg.max_terms}"
        )
    return n_tail, True


def _ap_panels(sigma: float, t_abs: float, N: int) -> int:
    rate = TWO_PI - t_abs / N
    return max(4, int(math.ceil(_AP_LOG_FLOOR / rate)))


def abel_plana_tail(sigma: float, t, N: int, nodes=None) -> np.ndarray:
    """sum_{n>=N} n^-(sigma+it) for each t >= 0 (array), N > |t|/2pi."""
    t = np.asarray(t, dtype=float)
    tmax = float(np.max(t)) if t.size else 0.0
    xs, ws = (_AP_X, _AP_W) if nodes is None else nodes
    npan = _ap_panels(sigma, tmax, N)
    y = ((np.arange(npan)[:, None] + 0.5) + 0.5 * xs[None, :]).ravel()
    wy = np.tile(0.5 * ws, npan) / np.expm1(TWO_PI * y)
    lmod = 0.5 * np.log(N * N + y * y)
    arg = np.arctan2(y, N)
    lnN = math.log(N)
    out = np.empty(t.shape, dtype=complex)
    flat_t = t.ravel()
    flat_o = out.reshape(-1)
    step = max(1, (1 << 20) // y.size)
    for lo in range(0, flat_t.size, step):
        s = sigma + 1j * flat_t[lo : lo + step, None]
        # f(N + iy) - f(N - iy) with f(z) = z^-s
        fp = np.exp(-s * (lmod + 1j * arg))
        fm = np.exp(-s * (lmod - 1j * arg))
        integral = 1j * ((fp - fm) @ wy)
        sv = s[:, 0]
        NsN = np.exp(-sv * lnN)
        flat_o[lo : lo + step] = N * NsN / (sv - 1.0) + 0.5 * NsN + integral
    return out


def dirichlet_values(sigma: float, t, cfg: EvalConfig = DEFAULT_EVAL) -> np.ndarray:
    """Vectorized zeta(sigma + it) by the Dirichlet route (complex array)."""
    t = np.asarray(t, dtype=float)
    ta = np.abs(t)
    tmax = float(ta.max()) if t.size else 0.0
    N, with_tail = choose_terms(float(sigma), tmax, cfg)
    if with_tail:
        z = _backend.dirichlet_points(ta, sigma, N - 1) + abel_plana_tail(sigma, ta, N)
    else:
        z = _backend.dirichlet_points(ta, sigma, N)
    return np.where(t < 0, np.conj(z), z)


def zeta_dirichlet(sigma: float, t: float, cfg: EvalConfig = DEFAULT_EVAL) -> ZetaSample:
    """zeta(sigma + it) from the Dirichlet series, sigma >= 1 + 1e-6.

    ``terms`` in the result is the series length; ``err_est`` is the tail
    bound (pure truncation) or the difference between two Gauss orders of the
    Abel-Plana integral.
    """
    sigma = float(sigma)
    t = float(t)
    N, with_tail = choose_terms(sigma, abs(t), cfg)
    ta = np.array([abs(t)])
    if with_tail:
        head = _backend.dirichlet_points(ta, sigma, N - 1)[0]
        tail = abel_plana_tail(sigma, ta, N)[0]
        coarse = abel_plana_tail(sigma, ta, N, nodes=(_AP_X8, _AP_W8))[0]
        z = complex(head + tail)
        err = abs(tail - coarse)
        method = "dirichlet+abel-plana"
    else:
        z = complex(_backend.dirichlet_points(ta, sigma, N)[0])
        err = N ** (1.0 - sigma) / (sigma - 1.0)
        method = "dirichlet"
    return _sample(sigma, t, z, method, N, err)


# ---------------------------------------------------------------------------
# critical line


def _check_hardy(t: np.ndarray) -> None:
    if t.size and not np.all(t >= HARDY_T_MIN):
        raise DomainError(f"hardy_z needs t >= {HARDY_T_MIN}, got min {float(np.min(t))}")


def hardy_z_em(t: float) -> float:
    """Z(t) = Re(exp(i theta(t)) zeta(1/2 + it)) with zeta by Euler-Maclaurin."""
    th = float(theta([t])[0])
    z = _em_value(complex(0.5, float(t)), 1e-13, DEFAULT_EVAL.max_terms)[0]
    return (complex(math.cos(th), math.sin(th)) * z).real


def hardy_z(t: float) -> float:
    """Hardy's Z(t) for t >= 2: Riemann-Siegel, or Euler-Maclaurin below t = 20."""
    return float(hardy_z_array(np.array([float(t)]))[0])


def hardy_z_array(t) -> np.ndarray:
    t = np.ascontiguousarray(t, dtype=float)
    _check_hardy(t)
    flat = t.ravel()
    out = _backend.hardy_z_points(flat)
    for i in np.flatnonzero(flat < HARDY_RS_MIN):
        out[i] = hardy_z_em(float(flat[i]))
    return out.reshape(t.shape)


def theta(t) -> np.ndarray:
    """Riemann-Siegel theta function."""
    t = np.ascontiguousarray(t, dtype=float)
    return _backend.theta_points(t.ravel()).reshape(t.shape)


# ---------------------------------------------------------------------------
# dispatch


def dispatch_route(sigma: float, t: float) -> str:
    """Name of the evaluator ``abs_zeta_sq`` uses at (sigma, t).

    sigma = 1/2 with |t| >= 2: Riemann-Siegel; sigma >= 1 + 1e-6: Dirichlet;
    anything else: Euler-Maclaurin.
    """
    if sigma == 0.5 and abs(t) >= HARDY_T_MIN:
        return "hardy"
    if sigma >= SIGMA_MIN_SERIES:
        return "dirichlet"
    return "euler-maclaurin"


def abs_zeta_sq(sigma: float, t: float, cfg: EvalConfig = DEFAULT_EVAL) -> float:
    """|zeta(sigma + it)|^2 through the route given by ``dispatch_route``."""
    sigma = float(sigma)
    t = float(t)
    route = dispatch_route(sigma, t)
    if route == "hardy":
        z = hardy_z(abs(t))
        return z * z
    if route == "dirichlet":
        return zeta_dirichlet(sigma, abs(t), cfg).abs_sq
    return zeta_em(sigma, abs(t), cfg).abs_sq


def abs_zeta_sq_array(sigma: float, t, cfg: EvalConfig = DEFAULT_EVAL) -> np.ndarray:
    """Vectorized ``abs_zeta_sq`` at a fixed sigma."""
    sigma = float(sigma)
    t = np.ascontiguousarray(t, dtype=float)
    ta = np.abs(t)
    if sigma == 0.5 and (ta.size == 0 or ta.min() >= HARDY_T_MIN):
        z = hardy_z_array(ta)
        return z * z
    if sigma >= SIGMA_MIN_SERIES:
        z = dirichlet_values(sigma, ta, cfg)
        return z.real**2 + z.imag**2
    flat = [abs_zeta_sq(sigma, float(x), cfg) for x in ta.ravel()]
    return np.array(flat, dtype=float).reshape(t.shape)


def first_zero_bracket(lo: float = 14.0, hi: float = 15.0, xtol: float = 1e-13) -> float:
    """Bisection for a sign change of Z on [lo, hi]."""
    zlo = hardy_z(lo)
    zhi = hardy_z(hi)
    if zlo == 0.0:
        return lo
    if zlo * zhi > 0:
        raise NonConvergence("no sign change of Z in bracket", {"lo": lo, "hi": hi})
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        zm = hardy_z(mid)
        if zm == 0.0 or hi - lo < xtol:
            return mid
        if (zm < 0) == (zlo < 0):
            lo, zlo = mid, zm
        else:
            hi = mid
    return 0.5 * (lo + hi)
