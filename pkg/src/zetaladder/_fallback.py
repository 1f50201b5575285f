"""Pure-numpy kernels.

Same call signatures and semantics as the compiled ``_kernels`` module; used
when the extension is unavailable or ``ZLL_PURE=1`` is set.  Results agree
with the compiled path to rounding, not bitwise.
"""

from __future__ import annotations

import math

import numpy as np

from ._series import (
    RS_BOUND,
    RS_IM,
    RS_LEN,
    RS_NTERMS,
    RS_RE,
    RS_TERM_FLOOR,
    STIRLING_COEF,
    THETA_COEF,
)

TWO_PI = 2.0 * math.pi
_CHUNK = 1 << 21  # matrix entries per vectorized block


def _theta_small(t: np.ndarray) -> np.ndarray:
    # Im log Gamma(1/4 + it/2) - (t/2) log pi, shifting the argument by 12
    # before applying Stirling.
    z = 0.25 + 0.5j * t
    w = z + 12.0
    lg = (w - 0.5) * np.log(w) - w
    wk = w.copy()
    w2 = w * w
    for c in STIRLING_COEF:
        lg = lg + c / wk
        wk = wk * w2
    im = lg.imag
    for j in range(12):
        im = im - np.arctan2(0.5 * t, 0.25 + j)
    return im - 0.5 * t * math.log(math.pi)


def theta_correction(t) -> np.ndarray:
    """theta(t) - (t/2 log(t/2pi) - t/2 - pi/8), the small Stirling tail."""
    t = np.asarray(t, dtype=float)
    out = np.empty_like(t)
    big = t >= 10.0
    tb = t[big]
    inv = 1.0 / tb
    inv2 = inv * inv
    acc = np.zeros_like(tb)
    for c in THETA_COEF[::-1]:
        acc = acc * inv2 + c
    out[big] = acc * inv
    ts = t[~big]
    out[~big] = _theta_small(ts) - (0.5 * ts * np.log(ts / TWO_PI) - 0.5 * ts - math.pi / 8)
    return out


def theta_points(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    return 0.5 * t * np.log(t / TWO_PI) - 0.5 * t - math.pi / 8 + theta_correction(t)


def _clenshaw(coef: np.ndarray, length: int, x: np.ndarray) -> np.ndarray:
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    x2 = 2.0 * x
    for i in range(length - 1, 0, -1):
        b1, b2 = coef[i] + x2 * b1 - b2, b1
    return coef[0] + x * b1 - b2


def rs_remainder(t) -> np.ndarray:
    """Riemann-Siegel correction to 2 sum_{n<=N} n^-1/2 cos(theta - t log n)."""
    t = np.asarray(t, dtype=float)
    a = np.sqrt(t / TWO_PI)
    N = np.floor(a)
    p = 1.0 - 2.0 * (a - N)
    inva = 1.0 / a
    acc = np.zeros(t.shape, dtype=complex)
    active = np.ones(t.shape, dtype=bool)
    scale = np.ones_like(t)
    prev = np.full(t.shape, np.inf)
    for k in range(RS_NTERMS):
        bound = RS_BOUND[k] * scale
        active &= (bound >= RS_TERM_FLOOR) & (bound <= prev)
        if not active.any():
            break
        n = RS_LEN[k]
        q = _clenshaw(RS_RE[k], n, p) + 1j * _clenshaw(RS_IM[k], n, p)
        acc += np.where(active, q * scale, 0.0)
        prev = bound
        scale = scale * inva
    sign = np.where(N.astype(np.int64) % 2 == 1, 1.0, -1.0)  # (-1)^(N-1)
    rot = np.exp(1j * theta_correction(t))
    return 2.0 * sign * (rot * acc).real / np.sqrt(a)


def _main_sum(t: np.ndarray, theta: np.ndarray) -> np.ndarray:
    out = np.zeros_like(t)
    if t.size == 0:
        return out
    nmax = int(math.sqrt(float(t.max()) / TWO_PI))
    if nmax < 1:
        return out
    n = np.arange(1, nmax + 1, dtype=float)
    logn = np.log(n)
    amp = 1.0 / np.sqrt(n)
    Nt = np.floor(np.sqrt(t / TWO_PI))
    step = max(1, _CHUNK // nmax)
    for lo in range(0, t.size, step):
        sl = slice(lo, lo + step)
        ph = theta[sl, None] - t[sl, None] * logn[None, :]
        mask = n[None, :] <= Nt[sl, None]
        out[sl] = np.sum(np.where(mask, amp * np.cos(ph), 0.0), axis=1)
    return 2.0 * out


def hardy_z_points(t) -> np.ndarray:
    t = np.ascontiguousarray(t, dtype=float)
    th = theta_points(t)
    return _main_sum(t, th) + rs_remainder(t)


def dirichlet_points(t, sigma: float, nterms: int) -> np.ndarray:
    """sum_{n=1}^{nterms} n^-sigma exp(-i t log n) for each t."""
    t = np.ascontiguousarray(t, dtype=float)
    out = np.zeros(t.shape, dtype=complex)
    if nterms < 1 or t.size == 0:
        return out
    step_n = min(nterms, 1 << 16)
    step_t = max(1, _CHUNK // step_n)
    for n0 in range(1, nterms + 1, step_n):
        n = np.arange(n0, min(nterms, n0 + step_n - 1) + 1, dtype=float)
        logn = np.log(n)
        amp = n ** (-sigma)
        for lo in range(0, t.size, step_t):
            sl = slice(lo, lo + step_t)
            ph = t[sl, None] * logn[None, :]
            out[sl] += (amp * np.cos(ph)).sum(axis=1) - 1j * (amp * np.sin(ph)).sum(axis=1)
    return out


def panel_nodes(t0: float, h: float, npanels: int, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    centers = t0 + (np.arange(npanels) + 0.5) * h
    return centers[:, None] + (0.5 * h) * x[None, :]


def dirichlet_grid(t0: float, h: float, npanels: int, x, sigma: float, nterms: int) -> np.ndarray:
    """Dirichlet partial sums at Gauss nodes of ``npanels`` equal panels."""
    nodes = panel_nodes(t0, h, npanels, x)
    return dirichlet_points(nodes.ravel(), sigma, nterms).reshape(nodes.shape)


def z2_panels(t0: float, h: float, npanels: int, x, w) -> np.ndarray:
    """Gauss-Legendre integral of Z(t)^2 over each of ``npanels`` panels."""
    nodes = panel_nodes(t0, h, npanels, x)
    z = hardy_z_points(nodes.ravel()).reshape(nodes.shape)
    return (0.5 * h) * (z * z) @ np.asarray(w, dtype=float)
