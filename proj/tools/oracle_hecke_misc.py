#!/usr/bin/env python3
"""Sanity oracles: Rankin local series, Schur determinant ratio, h_Z, spec measure.
Run: python3 oracle_hecke_misc.py
"""
import cmath
import itertools
import math

import mpmath as mp

mp.mp.dps = 30


def h_full(vals, maxdeg):
    h = [mp.mpc(1)] + [mp.mpc(0)] * maxdeg
    for v in vals:
        for m in range(1, maxdeg + 1):
            h[m] = h[m] + v * h[m - 1]
    return h


def make_B(triple, maxdeg=40):
    h = h_full(triple, maxdeg)

    def B(k, l):
        if k < 0 or l < 0:
            return mp.mpc(0)
        return h[k + l] * h[k] - h[k + l + 1] * (h[k - 1] if k >= 1 else mp.mpc(0))
    return B


def det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def schur_det_ratio(t, k, l):
    al, be, ga = t
    num = det3([[al ** (k + l + 2), be ** (k + l + 2), ga ** (k + l + 2)],
                [al ** (k + 1), be ** (k + 1), ga ** (k + 1)],
                [1, 1, 1]])
    den = det3([[al ** 2, be ** 2, ga ** 2], [al, be, ga], [1, 1, 1]])
    return num / den


def series_mul(a, b, order):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(order + 1)]


def rankin_check(t, order=8):
    B = make_B(list(t))
    lhs = [B(0, k) * B(k, 0) for k in range(order + 1)]
    rhs = [mp.mpc(1)] + [mp.mpc(0)] * order
    for ai in t:
        for aj in t:
            c = ai * mp.conj(aj)
            geo = [c ** k for k in range(order + 1)]
            rhs = series_mul(rhs, geo, order)
    Bpp = B(1, 1)
    poly = [mp.mpc(1), 0, -1 - Bpp, 2 * Bpp, -1 - Bpp, 0, 1, 0, 0]
    poly = poly[:order + 1] + [mp.mpc(0)] * max(0, order + 1 - len(poly))
    rhs = series_mul(rhs, poly, order)
    return lhs, rhs


def hZ(mu, mu0, Z, A):
    def N(z):
        return z[0] ** 2 + z[1] ** 2 + z[2] ** 2

    def P(m):
        prod = mp.mpc(1)
        for n in range(-A, A + 1):
            for (i, j) in [(0, 1), (0, 2), (1, 2)]:
                prod *= (m[i] - m[j] - (2 * n + 1))
        return prod

    perms = list(itertools.permutations(range(3)))
    stab = sum(1 for pr in perms
               if all(abs(mu0[pr[i]] - mu0[i]) < 1e-12 for i in range(3)))
    total = mp.mpc(0)
    for pr in perms:
        w = [mu0[pr[i]] for i in range(3)]
        total += mp.e ** (N([mu[i] - w[i] for i in range(3)]) * Z)
    return total / stab * P(mu) / P(mu0)


if __name__ == "__main__":
    t = [mp.e ** (1j * mp.mpf("0.9")), mp.e ** (1j * mp.mpf("2.1")), 0]
    t[2] = 1 / (t[0] * t[1])
    B = make_B(t)
    print("# Schur: division-free vs determinant ratio, k=2 l=1")
    print("  jacobi-trudi :", mp.nstr(B(2, 1), 20))
    print("  det ratio    :", mp.nstr(schur_det_ratio(t, 2, 1), 20))
    print("  B(2,2) at (1,1,1):", mp.nstr(make_B([1, 1, 1])(1, 1), 10))

    print("# Rankin local series, generic triple, order 8")
    lhs, rhs = rankin_check(t)
    worst = max(abs(x - y) for x, y in zip(lhs, rhs))
    print("  worst coeff |lhs-rhs| =", mp.nstr(worst, 5))
    print("  lhs coeffs:", [mp.nstr(c, 12) for c in lhs[:4]])

    lhs, rhs = rankin_check([mp.mpf(1), mp.mpf(1), mp.mpf(1)])
    print("  (1,1,1) worst =", mp.nstr(max(abs(x - y) for x, y in zip(lhs, rhs)), 5))
    print("  (1,1,1) lhs coeffs to order 8:", [mp.nstr(c, 12) for c in lhs])

    print("# h_Z: stabilizer-normalized")
    mu0 = [mp.mpc(0, 0.8), mp.mpc(0, 0.3), mp.mpc(0, -1.1)]
    print("  h_Z(mu0), Z=60, A=2:", mp.nstr(hZ(mu0, mu0, 60, 2), 20))
    mu_zero = [mu0[0], mu0[0] - 3, -2 * mu0[0] + 3]  # mu1 - mu2 = 3
    mu_zero = [mp.mpc(0, 0.5) + 3, mp.mpc(0, 0.5), mp.mpc(0, -1.0) - 3]
    print("  h_Z at mu1-mu2=3 (A=2):", mp.nstr(hZ(mu_zero, mu0, 60, 2), 10))
    mu_deg = [mp.mpc(0, 0.4), mp.mpc(0, 0.4), mp.mpc(0, -0.8)]
    print("  h_Z(mu0) degenerate mu0 (stab=2):", mp.nstr(hZ(mu_deg, mu_deg, 60, 2), 20))

    print("# spec measure")
    def spec(mu):
        d = [(mu[0] - mu[1]), (mu[1] - mu[2]), (mu[2] - mu[0])]
        prod = mp.mpc(1)
        for w in d:
            prod *= w * mp.tan(mp.pi / 2 * w)
        return prod
    mu = [mp.mpc(0, 0.4), mp.mpc(0, -0.1), mp.mpc(0, -0.3)]
    print("  spec(0.4i,-0.1i,-0.3i) =", mp.nstr(spec(mu), 20))
    print("  spec(1,-1,0) =", mp.nstr(spec([1, -1, 0]), 10))
    mue = [mp.mpc(2, 0.3), mp.mpc(0, 0.3), mp.mpc(-2, -0.6)]
    print("  spec(mu1-mu2=2 even) =", mp.nstr(spec(mue), 10))
