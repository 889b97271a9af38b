#!/usr/bin/env python3
"""Independent mpmath evaluation of the gamma-product kernels.

Produces high-precision reference values that are frozen into the C++ unit
tests, and numerically confirms the kernel identity before any C++ exists.
Run: python3 oracle_kernels.py
"""
import mpmath as mp

mp.mp.dps = 40


def e(t):
    return mp.e ** (2j * mp.pi * t)


def voronoi_kernel(s, mu, sign):
    """4(2pi)^{-3s} prod Gamma(s+mu_j) (prod cos(pi(s+mu_j)/2) +- (1/i) prod sin(...))."""
    gp = mp.mpf(1)
    cp = mp.mpf(1)
    sp = mp.mpf(1)
    for m in mu:
        gp *= mp.gamma(s + m)
        cp *= mp.cos(mp.pi * (s + m) / 2)
        sp *= mp.sin(mp.pi * (s + m) / 2)
    return 4 * (2 * mp.pi) ** (-3 * s) * gp * (cp + sign * sp / 1j)


def gtilde(s, mu, sign):
    pref = mp.pi ** (-3 * s) / (12288 * mp.pi ** mp.mpf(3.5))
    p1 = mp.mpf(1)
    p2 = mp.mpf(1)
    for m in mu:
        p1 *= mp.gamma((s - m) / 2) / mp.gamma((1 - s + m) / 2)
        p2 *= mp.gamma((1 + s - m) / 2) / mp.gamma((2 - s + m) / 2)
    return pref * (p1 + sign * 1j * p2)


def gsym(s1, s2, mu, e1, e2):
    total = mp.mpf(0)
    for d1 in (0, 1):
        for d2 in (0, 1):
            d3 = (d1 + d2) % 2
            term = (e1 ** d1) * (e2 ** d2) * ((-1) ** (d1 * d2))
            term *= mp.gamma((1 + d3 - s1 - s2) / 2) / mp.gamma((d3 + s1 + s2) / 2)
            for m in mu:
                term *= mp.gamma((d1 + s1 - m) / 2) * mp.gamma((d2 + s2 + m) / 2)
                term /= mp.gamma((1 + d1 - s1 + m) / 2) * mp.gamma((1 + d2 - s2 - m) / 2)
            total += term
    return total / (1024 * mp.pi ** mp.mpf(2.5))


def vrv_kernel(s1, s2, mu0, e1, e2):
    total = mp.mpf(0)
    for eta1 in (1, -1):
        eta2 = e1 * e2 * eta1
        total += (mp.gamma(1 - s1 - s2)
                  * voronoi_kernel(s1, mu0, eta1)
                  * voronoi_kernel(s2, [-m for m in mu0], eta2)
                  * e(e2 * eta1 * (s1 + s2 - 1) / 4))
    return total


def identity_residual(s1, s2, mu0, e1, e2):
    lhs = vrv_kernel(s1, s2, mu0, e1, e2)
    rhs = (512 * mp.pi ** (3 * (2 - s1 - s2)) * mp.mpf(2) ** (-s1 - s2)
           * gsym(s1, s2, [-m for m in mu0], -e2, -e1))
    return abs(lhs - rhs) / (abs(lhs) + abs(rhs)), lhs


def show(label, z):
    z = mp.mpc(z)
    print(f"{label}\n    = {mp.nstr(z.real, 25)} + {mp.nstr(z.imag, 25)}i")


if __name__ == "__main__":
    print("# gamma reference values (25 digits)")
    for z in [mp.mpc(3, 4), mp.mpc(-2.5, 1.5), mp.mpc(10, -10), mp.mpc(0.5, 30),
              mp.mpc(0.25, 0), mp.mpc(-0.5, 0), mp.mpc(1, -1), mp.mpc(-4.3, 0.2),
              mp.mpc(48.5, 10), mp.mpc(0.001, 0.999)]:
        show(f"Gamma({z})", mp.gamma(z))
    show("|Gamma(i)|^2 (= pi/sinh(pi))", mp.gamma(1j) * mp.gamma(-1j))
    print()

    print("# voronoi kernel")
    mu0 = [mp.mpc(0), mp.mpc(0), mp.mpc(0)]
    show("G^+(1, mu=0)  [expect -i/(2 pi^3)]", voronoi_kernel(1, mu0, 1))
    show("-i/(2 pi^3)", -1j / (2 * mp.pi ** 3))
    show("G^-(1, mu=0)  [expect +i/(2 pi^3)]", voronoi_kernel(1, mu0, -1))
    mu = [mp.mpc(0, 0.4), mp.mpc(0, -0.1), mp.mpc(0, -0.3)]
    show("G^+(0.7i, mu=(.4i,-.1i,-.3i))", voronoi_kernel(mp.mpc(0, 0.7), mu, 1))
    show("G^-(0.7i, mu)", voronoi_kernel(mp.mpc(0, 0.7), mu, -1))
    print()

    print("# gtilde")
    show("Gt^+(0.3i, mu)", gtilde(mp.mpc(0, 0.3), mu, 1))
    show("Gt^-(0.3i, mu)", gtilde(mp.mpc(0, 0.3), mu, -1))
    show("Gt^+(0.1+2i, mu)", gtilde(mp.mpc(0.1, 2), mu, 1))
    print()

    print("# gsym at pinned point s1=s2=0.3i, mu=(0.7i,-0.2i,-0.5i), eps=(+,+)")
    mu_p = [mp.mpc(0, 0.7), mp.mpc(0, -0.2), mp.mpc(0, -0.5)]
    show("Gsym", gsym(mp.mpc(0, 0.3), mp.mpc(0, 0.3), mu_p, 1, 1))
    print()

    print("# kernel identity residuals (relative)")
    cases = [
        (mp.mpc(0, 0.4), mp.mpc(0, -0.9), [mp.mpc(0, 0.3), mp.mpc(0, 0.5), mp.mpc(0, -0.8)], 1, -1),
        (mp.mpc(0, 0.25), mp.mpc(0, 0.25), [mp.mpc(0), mp.mpc(0), mp.mpc(0)], 1, 1),
        (mp.mpc(0.05, 0.6), mp.mpc(-0.05, -0.3), [mp.mpc(0, 0.2), mp.mpc(0, -0.9), mp.mpc(0, 0.7)], -1, 1),
        (mp.mpc(0, 1.3), mp.mpc(0, 0.2), [mp.mpc(0, 0.1), mp.mpc(0, 0.15), mp.mpc(0, -0.25)], -1, -1),
    ]
    for (s1, s2, m0, e1, e2) in cases:
        res, lhs = identity_residual(s1, s2, m0, e1, e2)
        print(f"  s1={s1} s2={s2} eps=({e1},{e2}): residual = {mp.nstr(res, 5)}  lhs = {mp.nstr(lhs, 20)}")
