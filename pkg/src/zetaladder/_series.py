"""Constant tables shared by the compiled and pure-Python kernels."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import bernoulli

from ._rs_tables import RS_CHEB

# Bernoulli numbers B_0..B_40 as floats.
_B = bernoulli(40)

# theta(t) = t/2 log(t/2pi) - t/2 - pi/8 + sum_k THETA_COEF[k] t^(1-2k),  k >= 1
THETA_COEF = np.array(
    [(1.0 - 2.0 ** (1 - 2 * k)) * abs(_B[2 * k]) / (4 * k * (2 * k - 1)) for k in range(1, 9)]
)

# Stirling series of log Gamma: sum_k B_2k / (2k (2k-1) w^(2k-1))
STIRLING_COEF = np.array([_B[2 * k] / (2 * k * (2 * k - 1)) for k in range(1, 10)])

# Euler-Maclaurin weights B_2k / (2k)!, k = 1..60.  Past k = 20 the factorials
# get large, so use B_2k/(2k)! = (-1)^(k+1) 2 zeta(2k) / (2 pi)^(2k) there.
def _em_weights(kmax: int) -> np.ndarray:
    out = np.empty(kmax)
    n = np.arange(2, 64, dtype=float)
    for k in range(1, kmax + 1):
        if k <= 20:
            out[k - 1] = _B[2 * k] / math.factorial(2 * k)
        else:
            z2k = 1.0 + float(np.sum(n ** (-2.0 * k)))
            out[k - 1] = (-1) ** (k + 1) * 2.0 * z2k / (2 * math.pi) ** (2 * k)
    return out


EM_WEIGHTS = _em_weights(60)

# Riemann-Siegel remainder polynomials, padded into dense arrays.
RS_NTERMS = len(RS_CHEB)
RS_DEG = max(len(p) for p in RS_CHEB)
RS_RE = np.zeros((RS_NTERMS, RS_DEG))
RS_IM = np.zeros((RS_NTERMS, RS_DEG))
RS_LEN = np.array([len(p) for p in RS_CHEB], dtype=np.int64)
for _k, _poly in enumerate(RS_CHEB):
    for _i, (_re, _im) in enumerate(_poly):
        RS_RE[_k, _i] = _re
        RS_IM[_k, _i] = _im
# sum of |coefficients| bounds |Q_k| on [-1, 1]
RS_BOUND = np.sum(np.hypot(RS_RE, RS_IM), axis=1)

# Remainder terms below this absolute size are not added.
RS_TERM_FLOOR = 1e-17

EULER_GAMMA = 0.57721566490153286061
LOG_2PI = math.log(2 * math.pi)
