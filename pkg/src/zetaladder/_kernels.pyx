# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels for Hardy Z and Dirichlet polynomials, including Z^2 panel sums.

Mirrors ``_fallback`` function by function.  The panel routines advance
exp(-i t log n) across equally spaced panels by complex multiplication and
re-seed it with a direct sin/cos every ``BLOCK`` panels, so results depend
on the panel layout but never on how calls are distributed over threads.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sin, cos, log, sqrt, floor, atan2, INFINITY
from libc.stdlib cimport malloc, free

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
from ._fallback import panel_nodes

cnp.import_array()

DEF BLOCK = 256
DEF MAXQ = 64

cdef double TWO_PI = 6.283185307179586476925287
cdef double PI = 3.141592653589793238462643
cdef double LOG_PI = 1.144729885849400174143427

# keep the arrays alive; the kernels read them through raw pointers
_rs_re = np.ascontiguousarray(RS_RE, dtype=np.float64)
_rs_im = np.ascontiguousarray(RS_IM, dtype=np.float64)
_rs_len = np.ascontiguousarray(RS_LEN, dtype=np.int64)
_rs_bound = np.ascontiguousarray(RS_BOUND, dtype=np.float64)
_theta_coef = np.ascontiguousarray(THETA_COEF, dtype=np.float64)
_stirling = np.ascontiguousarray(STIRLING_COEF, dtype=np.float64)

cdef double* rs_re = <double*> cnp.PyArray_DATA(_rs_re)
cdef double* rs_im = <double*> cnp.PyArray_DATA(_rs_im)
cdef long long* rs_len = <long long*> cnp.PyArray_DATA(_rs_len)
cdef double* rs_bound = <double*> cnp.PyArray_DATA(_rs_bound)
cdef double* theta_coef = <double*> cnp.PyArray_DATA(_theta_coef)
cdef double* stirling = <double*> cnp.PyArray_DATA(_stirling)
cdef int rs_nterms = RS_NTERMS
cdef int rs_deg = _rs_re.shape[1]
cdef int n_theta = _theta_coef.shape[0]
cdef int n_stirling = _stirling.shape[0]
cdef double rs_floor = RS_TERM_FLOOR


cdef inline double theta_main(double t) noexcept nogil:
    return 0.5 * t * log(t / TWO_PI) - 0.5 * t - 0.125 * PI


cdef double theta_small(double t) noexcept nogil:
    cdef double u = 12.25, v = 0.5 * t
    cdef double r2 = u * u + v * v
    cdef double L = 0.5 * log(r2), phi = atan2(v, u)
    cdef double im = (u - 0.5) * phi + v * L - v
    # w^-1, then w^-(2k-1) by repeated multiplication with w^-2
    cdef double ir = u / r2, ii = -v / r2
    cdef double i2r = ir * ir - ii * ii, i2i = 2.0 * ir * ii
    cdef double pr = ir, pi_ = ii, tmp
    cdef int k, j
    for k in range(n_stirling):
        im += stirling[k] * pi_
        tmp = pr * i2r - pi_ * i2i
        pi_ = pr * i2i + pi_ * i2r
        pr = tmp
    for j in range(12):
        im -= atan2(v, 0.25 + j)
    return im - v * LOG_PI


cdef double theta_corr(double t) noexcept nogil:
    cdef double inv, inv2, acc
    cdef int k
    if t >= 10.0:
        inv = 1.0 / t
        inv2 = inv * inv
        acc = 0.0
        for k in range(n_theta - 1, -1, -1):
            acc = acc * inv2 + theta_coef[k]
        return acc * inv
    return theta_small(t) - theta_main(t)


cdef double rs_rem(double t) noexcept nogil:
    cdef double a = sqrt(t / TWO_PI)
    cdef double N = floor(a)
    cdef double p = 1.0 - 2.0 * (a - N)
    cdef double inva = 1.0 / a, scale = 1.0, prev = INFINITY, bound
    cdef double accr = 0.0, acci = 0.0
    cdef double br1, br2, bi1, bi2, tr, ti, x2 = 2.0 * p
    cdef double* cr
    cdef double* ci
    cdef int k, i, n
    for k in range(rs_nterms):
        bound = rs_bound[k] * scale
        if bound < rs_floor or bound > prev:
            break
        cr = rs_re + k * rs_deg
        ci = rs_im + k * rs_deg
        n = <int> rs_len[k]
        br1 = 0.0; br2 = 0.0; bi1 = 0.0; bi2 = 0.0
        for i in range(n - 1, 0, -1):
            tr = cr[i] + x2 * br1 - br2
            br2 = br1
            br1 = tr
            ti = ci[i] + x2 * bi1 - bi2
            bi2 = bi1
            bi1 = ti
        accr += (cr[0] + p * br1 - br2) * scale
        acci += (ci[0] + p * bi1 - bi2) * scale
        prev = bound
        scale *= inva
    cdef double d = theta_corr(t)
    cdef double val = cos(d) * accr - sin(d) * acci
    cdef long long Ni = <long long> N
    cdef double sign = 1.0 if (Ni % 2 == 1) else -1.0
    return 2.0 * sign * val / sqrt(a)


def theta_correction(t):
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64).ravel()
    out = np.empty(tv.shape[0])
    cdef double[::1] o = out
    cdef Py_ssize_t j
    with nogil:
        for j in range(tv.shape[0]):
            o[j] = theta_corr(tv[j])
    return out.reshape(np.shape(t))


def theta_points(t):
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64).ravel()
    out = np.empty(tv.shape[0])
    cdef double[::1] o = out
    cdef Py_ssize_t j
    with nogil:
        for j in range(tv.shape[0]):
            o[j] = theta_main(tv[j]) + theta_corr(tv[j])
    return out.reshape(np.shape(t))


def rs_remainder(t):
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64).ravel()
    out = np.empty(tv.shape[0])
    cdef double[::1] o = out
    cdef Py_ssize_t j
    with nogil:
        for j in range(tv.shape[0]):
            o[j] = rs_rem(tv[j])
    return out.reshape(np.shape(t))


cdef void _log_amp(long nmax, double sigma, double* logn, double* amp) noexcept nogil:
    cdef long n
    for n in range(1, nmax + 1):
        logn[n] = log(<double> n)
        amp[n] = 1.0 / sqrt(<double> n) if sigma == 0.5 else (<double> n) ** (-sigma)


def hardy_z_points(t):
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64).ravel()
    cdef Py_ssize_t m = tv.shape[0], j
    out = np.empty(m)
    cdef double[::1] o = out
    if m == 0:
        return out.reshape(np.shape(t))
    cdef double tmax = np.max(tv)
    cdef long nmax = <long> floor(sqrt(tmax / TWO_PI)), n, Nt
    cdef double* logn = <double*> malloc((nmax + 1) * sizeof(double))
    cdef double* amp = <double*> malloc((nmax + 1) * sizeof(double))
    cdef double th, tt, s
    try:
        with nogil:
            _log_amp(nmax, 0.5, logn, amp)
            for j in range(m):
                tt = tv[j]
                th = theta_main(tt) + theta_corr(tt)
                Nt = <long> floor(sqrt(tt / TWO_PI))
                s = 0.0
                for n in range(1, Nt + 1):
                    s += amp[n] * cos(th - tt * logn[n])
                o[j] = 2.0 * s + rs_rem(tt)
    finally:
        free(logn)
        free(amp)
    return out.reshape(np.shape(t))


def dirichlet_points(t, double sigma, long nterms):
    """sum_{n=1}^{nterms} n^-sigma exp(-i t log n) for each t."""
    cdef double[::1] tv = np.ascontiguousarray(t, dtype=np.float64).ravel()
    cdef Py_ssize_t m = tv.shape[0], j
    re = np.zeros(m)
    im = np.zeros(m)
    cdef double[::1] ro = re
    cdef double[::1] io = im
    if nterms < 1 or m == 0:
        return (re + 1j * im).reshape(np.shape(t))
    cdef double* logn = <double*> malloc((nterms + 1) * sizeof(double))
    cdef double* amp = <double*> malloc((nterms + 1) * sizeof(double))
    cdef double sr, si, ph, tt
    cdef long n
    try:
        with nogil:
            _log_amp(nterms, sigma, logn, amp)
            for j in range(m):
                tt = tv[j]
                sr = 0.0
                si = 0.0
                for n in range(1, nterms + 1):
                    ph = tt * logn[n]
                    sr += amp[n] * cos(ph)
                    si -= amp[n] * sin(ph)
                ro[j] = sr
                io[j] = si
    finally:
        free(logn)
        free(amp)
    return (re + 1j * im).reshape(np.shape(t))


DEF TILE = 32        # panels per accumulator tile (divides BLOCK)
DEF NCHUNK = 4096    # terms per pass over the panels


cdef void _grid_tile(long n0, long n1, int q, int ptile, double* offr, double* offi,
                     double* stepr, double* stepi, double* basr, double* basi,
                     double* accr, double* acci) noexcept nogil:
    # accr/acci hold ptile*q partial sums; base phases advance in place
    cdef long n, j
    cdef int p, k
    cdef double br, bi, sr, si, tmp
    cdef double* o_r
    cdef double* o_i
    cdef double* a_r
    cdef double* a_i
    for n in range(n0, n1):
        j = n - n0
        br = basr[j]
        bi = basi[j]
        sr = stepr[j]
        si = stepi[j]
        o_r = offr + j * q
        o_i = offi + j * q
        for p in range(ptile):
            a_r = accr + p * q
            a_i = acci + p * q
            for k in range(q):
                a_r[k] += br * o_r[k] - bi * o_i[k]
                a_i[k] += br * o_i[k] + bi * o_r[k]
            tmp = br * sr - bi * si
            bi = br * si + bi * sr
            br = tmp
        basr[j] = br
        basi[j] = bi


def dirichlet_grid(double t0, double h, long npanels, x, double sigma, long nterms):
    """Dirichlet partial sums at Gauss nodes of ``npanels`` equal panels."""
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef int q = xv.shape[0], k, ptile
    if q > MAXQ:
        raise ValueError("too many nodes per panel")
    sr_arr = np.zeros((npanels, q))
    si_arr = np.zeros((npanels, q))
    if nterms < 1 or npanels < 1:
        return sr_arr + 1j * si_arr
    cdef double* SR = <double*> cnp.PyArray_DATA(sr_arr)
    cdef double* SI = <double*> cnp.PyArray_DATA(si_arr)
    cdef double xk[MAXQ]
    for k in range(q):
        xk[k] = xv[k]
    cdef long nc = min(nterms, <long> NCHUNK)
    cdef double* offr = <double*> malloc(nc * q * sizeof(double))
    cdef double* offi = <double*> malloc(nc * q * sizeof(double))
    cdef double* stepr = <double*> malloc(nc * sizeof(double))
    cdef double* stepi = <double*> malloc(nc * sizeof(double))
    cdef double* basr = <double*> malloc(nc * sizeof(double))
    cdef double* basi = <double*> malloc(nc * sizeof(double))
    cdef double* amp = <double*> malloc(nc * sizeof(double))
    cdef double* lns = <double*> malloc(nc * sizeof(double))
    cdef double accr[TILE * MAXQ]
    cdef double acci[TILE * MAXQ]
    cdef long n0, n1, n, j, p0, i
    cdef double ln, c0
    try:
        with nogil:
            n0 = 1
            while n0 <= nterms:
                n1 = min(n0 + nc, nterms + 1)
                for n in range(n0, n1):
                    j = n - n0
                    ln = log(<double> n)
                    lns[j] = ln
                    amp[j] = (<double> n) ** (-sigma)
                    stepr[j] = cos(h * ln)
                    stepi[j] = -sin(h * ln)
                    for k in range(q):
                        offr[j * q + k] = cos(0.5 * h * xk[k] * ln)
                        offi[j * q + k] = -sin(0.5 * h * xk[k] * ln)
                for p0 in range(0, npanels, TILE):
                    if p0 % BLOCK == 0:
                        # re-seed exp(-i c ln n) at every block start
                        c0 = t0 + (p0 + 0.5) * h
                        for j in range(n1 - n0):
                            basr[j] = amp[j] * cos(c0 * lns[j])
                            basi[j] = -amp[j] * sin(c0 * lns[j])
                    ptile = <int> min(<long> TILE, npanels - p0)
                    for i in range(ptile * q):
                        accr[i] = 0.0
                        acci[i] = 0.0
                    _grid_tile(n0, n1, q, ptile, offr, offi, stepr, stepi, basr, basi, accr, acci)
                    for i in range(ptile * q):
                        SR[p0 * q + i] += accr[i]
                        SI[p0 * q + i] += acci[i]
                n0 = n1
    finally:
        free(offr); free(offi); free(stepr); free(stepi)
        free(basr); free(basi); free(amp); free(lns)
    return sr_arr + 1j * si_arr

cdef inline void _acc8(long lo, double* basr, double* basi, double* offr, double* offi,
                       double* Sr, double* Si) noexcept nogil:
    # fixed node count so the compiler can unroll and vectorize over k
    cdef double ar[8]
    cdef double ai[8]
    cdef double br, bi
    cdef double* o_r
    cdef double* o_i
    cdef long n
    cdef int k
    for k in range(8):
        ar[k] = 0.0
        ai[k] = 0.0
    for n in range(1, lo + 1):
        br = basr[n]
        bi = basi[n]
        o_r = offr + n * 8
        o_i = offi + n * 8
        for k in range(8):
            ar[k] += br * o_r[k] - bi * o_i[k]
            ai[k] += br * o_i[k] + bi * o_r[k]
    for k in range(8):
        Sr[k] += ar[k]
        Si[k] += ai[k]


def z2_panels(double t0, double h, long npanels, x, w):
    """Gauss-Legendre integral of Z(t)^2 over each of ``npanels`` panels."""
    cdef double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef int q = xv.shape[0], k
    if q > MAXQ:
        raise ValueError("too many nodes per panel")
    out = np.zeros(npanels)
    cdef double[::1] o = out
    if npanels < 1:
        return out
    cdef double tlast = t0 + npanels * h
    cdef long nmax = <long> floor(sqrt(tlast / TWO_PI)), n, p, b
    cdef long lo, hi
    cdef long Nk[MAXQ]
    cdef double tk[MAXQ]
    cdef double thk[MAXQ]
    cdef double remk[MAXQ]
    cdef double Sr[MAXQ]
    cdef double Si[MAXQ]
    cdef double xk[MAXQ]
    cdef double wk[MAXQ]
    cdef double c, br, bi, tmp, z, acc, ln
    for k in range(q):
        xk[k] = xv[k]
        wk[k] = wv[k]
    cdef long nn = nmax + 1
    cdef double* amp = <double*> malloc(nn * sizeof(double))
    cdef double* stepr = <double*> malloc(nn * sizeof(double))
    cdef double* stepi = <double*> malloc(nn * sizeof(double))
    cdef double* basr = <double*> malloc(nn * sizeof(double))
    cdef double* basi = <double*> malloc(nn * sizeof(double))
    cdef double* offr = <double*> malloc(nn * q * sizeof(double))
    cdef double* offi = <double*> malloc(nn * q * sizeof(double))
    try:
        with nogil:
            for n in range(1, nmax + 1):
                ln = log(<double> n)
                amp[n] = 1.0 / sqrt(<double> n)
                stepr[n] = cos(h * ln)
                stepi[n] = -sin(h * ln)
                for k in range(q):
                    offr[n * q + k] = cos(0.5 * h * xk[k] * ln)
                    offi[n * q + k] = -sin(0.5 * h * xk[k] * ln)
            for b in range(0, npanels, BLOCK):
                c = t0 + (b + 0.5) * h
                for n in range(1, nmax + 1):
                    ln = log(<double> n)
                    basr[n] = amp[n] * cos(c * ln)
                    basi[n] = -amp[n] * sin(c * ln)
                for p in range(b, min(b + BLOCK, npanels)):
                    c = t0 + (p + 0.5) * h
                    lo = nmax
                    hi = 0
                    for k in range(q):
                        tk[k] = c + 0.5 * h * xk[k]
                        Nk[k] = <long> floor(sqrt(tk[k] / TWO_PI))
                        if Nk[k] < lo:
                            lo = Nk[k]
                        if Nk[k] > hi:
                            hi = Nk[k]
                        thk[k] = theta_main(tk[k]) + theta_corr(tk[k])
                        remk[k] = rs_rem(tk[k])
                        Sr[k] = 0.0
                        Si[k] = 0.0
                    if q == 8:
                        _acc8(lo, basr, basi, offr, offi, Sr, Si)
                    else:
                        for n in range(1, lo + 1):
                            br = basr[n]
                            bi = basi[n]
                            for k in range(q):
                                Sr[k] += br * offr[n * q + k] - bi * offi[n * q + k]
                                Si[k] += br * offi[n * q + k] + bi * offr[n * q + k]
                    for n in range(lo + 1, hi + 1):
                        br = basr[n]
                        bi = basi[n]
                        for k in range(q):
                            if n <= Nk[k]:
                                Sr[k] += br * offr[n * q + k] - bi * offi[n * q + k]
                                Si[k] += br * offi[n * q + k] + bi * offr[n * q + k]
                    acc = 0.0
                    for k in range(q):
                        z = 2.0 * (cos(thk[k]) * Sr[k] - sin(thk[k]) * Si[k]) + remk[k]
                        acc += wk[k] * z * z
                    o[p] = 0.5 * h * acc
                    for n in range(1, nmax + 1):
                        tmp = basr[n] * stepr[n] - basi[n] * stepi[n]
                        basi[n] = basr[n] * stepi[n] + basi[n] * stepr[n]
                        basr[n] = tmp
    finally:
        free(amp); free(stepr); free(stepi); free(basr); free(basi)
        free(offr); free(offi)
    return out
