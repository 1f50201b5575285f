"""Regenerate ``src/zetaladder/_rs_tables.py``.

The Riemann-Siegel remainder on the critical line is written as

    R(t) = 2 (-1)^(N-1) a^(-1/2) Re( e^{i dtheta} sum_k Q_k(p) a^(-k) )

with a = sqrt(t / 2 pi), N = floor(a), p = 1 - 2 (a - N) and Q_k complex
polynomials built from the Taylor coefficients of

    F(z) = (exp(i pi (z^2/2 + 3/8)) - i sqrt(2) cos(pi z / 2)) / (2 cos(pi z))

and the d[k, l] recursion of Arias de Reyna (Math. Comp. 2011).  The
polynomials are computed once in high precision with mpmath and frozen as
Chebyshev coefficients on [-1, 1].

Run:  python tools/gen_rs_tables.py > src/zetaladder/_rs_tables.py
"""

import math
from fractions import Fraction

import mpmath as mp

K_TERMS = 24
TAYLOR_ORDER = 140
CHEB_CUTOFF = 1e-19


def taylor_F():
    def F(z):
        num = mp.exp(mp.pi * 1j * (z * z / 2 + mp.mpf(3) / 8)) - 1j * mp.sqrt(2) * mp.cos(mp.pi * z / 2)
        return num / (2 * mp.cos(mp.pi * z))

    return mp.taylor(F, mp.mpf(0), TAYLOR_ORDER)


def d_table():
    d = {}

    def get(n, k):
        return d.get((n, k), Fraction(0))

    d[(0, 0)] = Fraction(1)
    for n in range(1, K_TERMS):
        for k in range(0, 3 * n // 2 + 1):
            m = 3 * n - 2 * k
            if m != 0:
                d[(n, k)] = -(m + 1) * get(n - 1, k - 2) + Fraction(1, 4 * m) * get(n - 1, k)
            else:
                v = Fraction(0)
                for r in range(k):
                    v -= (-1) ** (k - r) * get(n, r) * Fraction(
                        math.factorial(2 * k - 2 * r), math.factorial(k - r)
                    )
                d[(n, k)] = v
    return d


def taylor_to_cheb(coeffs):
    # x^i = 2^-i sum_{j=0}^{i} binom(i, j) T_{|i-2j|}(x)
    out = [mp.mpc(0)] * len(coeffs)
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        scale = mp.mpf(2) ** (-i)
        for j in range(i + 1):
            out[abs(i - 2 * j)] += c * mp.binomial(i, j) * scale
    return out


def main():
    mp.mp.dps = 90
    c = taylor_F()
    d = d_table()
    polys = []
    for k in range(K_TERMS):
        acc = [mp.mpc(0)] * (TAYLOR_ORDER + 1)
        for ell in range(3 * k // 2 + 1):
            dk = d.get((k, ell), Fraction(0))
            if dk == 0:
                continue
            m = 3 * k - 2 * ell
            w = mp.mpf(dk.numerator) / dk.denominator / (mp.pi ** (2 * k - ell) * (2j) ** ell)
            for i in range(m, TAYLOR_ORDER + 1):
                acc[i - m] += w * c[i] * mp.fac(i) / mp.fac(i - m)
        cheb = taylor_to_cheb(acc[: TAYLOR_ORDER - 3 * k])
        n = len(cheb)
        while n > 1 and abs(cheb[n - 1]) < CHEB_CUTOFF:
            n -= 1
        polys.append([(float(v.real), float(v.imag)) for v in cheb[:n]])

    print('"""Frozen Riemann-Siegel remainder tables; generated by tools/gen_rs_tables.py."""')
    print()
    print("# Chebyshev coefficients on [-1, 1] of the complex remainder polynomials Q_k,")
    print("# as (real, imag) pairs.")
    print("RS_CHEB = (")
    for poly in polys:
        print("    (")
        for re, im in poly:
            print(f"        ({re!r}, {im!r}),")
        print("    ),")
    print(")")


if __name__ == "__main__":
    main()
