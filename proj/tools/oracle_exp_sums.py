#!/usr/bin/env python3
"""Independent reference evaluation of the exponential sums.

Brute-force enumeration only, no shortcuts. The printed values are frozen
into the C++ unit tests as reference constants. Run: python3 oracle_exp_sums.py
"""
import cmath
import math
from math import gcd


def e(t):
    return cmath.exp(2j * math.pi * t)


def inv_mod(a, n):
    """Inverse of a mod n (n >= 1). For n == 1 returns 0."""
    if n == 1:
        return 0
    g, x = extended_gcd(a % n, n)[:2]
    if g != 1:
        raise ValueError(f"{a} not invertible mod {n}")
    return x % n


def extended_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def kloosterman(n, m, c):
    total = 0j
    for x in range(c):
        if gcd(x, c) == 1:
            total += e((n * x + m * inv_mod(x, c)) / c)
    if c == 1:
        total = e(0)  # single residue x = 0
    return total


def ramanujan(n, q):
    return sum(e(n * x / q) for x in range(q) if gcd(x, q) == 1)


def ramanujan_divisor_sum(n, q):
    """Sum over d | gcd(n, q) of d * mu(q/d)."""
    total = 0
    g = gcd(n, q) if n else q
    for d in range(1, q + 1):
        if q % d == 0 and g % d == 0:
            total += d * mobius(q // d)
    return total


def mobius(n):
    if n == 1:
        return 1
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def gl3_short(n1, n2, m1, D1, D2):
    assert D2 % D1 == 0
    q = D2 // D1
    total = 0j
    for C1 in range(D1):
        if gcd(C1, D1) != 1:
            continue
        C1bar = inv_mod(C1, D1)
        for C2 in range(D2):
            if gcd(C2, q) != 1:
                continue
            C2bar = inv_mod(C2, q)
            total += e(n2 * C1bar * C2 / D1 + (m1 * C2bar / q if q > 1 else 0) + n1 * C1 / D1)
    return total


def yz_pair(B, C, D, variant=0):
    """Solve Y*B + Z*C == 1 mod D given gcd(B, C, D) == 1."""
    if D == 1:
        return 0, 0
    g, u, v = extended_gcd(B % D, C % D)
    if g == 0:
        g, u, v = extended_gcd(B % D + D, C % D)
    w = inv_mod(g % D, D)
    Y, Z = (u * w) % D, (v * w) % D
    if variant:  # alternative valid choice: (Y + C, Z - B) mod D
        Y, Z = (Y + C) % D, (Z - B) % D
    assert (Y * B + Z * C) % D == 1 % D
    return Y, Z


def gl3_long(n1, m2, m1, n2, D1, D2, variant=0):
    total = 0j
    for B1 in range(D1):
        for C1 in range(D1):
            if gcd(gcd(B1, C1), D1) != 1:
                continue
            Y1, Z1 = yz_pair(B1, C1, D1, variant)
            for B2 in range(D2):
                for C2 in range(D2):
                    if gcd(gcd(B2, C2), D2) != 1:
                        continue
                    if (D1 * C2 + B1 * B2 + D2 * C1) % (D1 * D2) != 0:
                        continue
                    Y2, Z2 = yz_pair(B2, C2, D2, variant)
                    total += e((n1 * B1 + m1 * (Y1 * D2 - Z1 * B2)) / D1
                               + (m2 * B2 + n2 * (Y2 * D1 - Z2 * B1)) / D2)
    return total


def kn_rhs(n1, m2, m1, n2, D1, D2):
    total = 0j
    g12 = gcd(D1, D2)
    for D0 in range(1, g12 + 1):
        if g12 % D0 != 0:
            continue
        for alpha in range(D0):
            if gcd(alpha, D0) != 1 and D0 > 1:
                continue
            if D0 == 1 and alpha != 0:
                continue
            if (m1 * (D2 // D0) + m2 * (D1 // D0) * alpha) % D0 != 0:
                continue
            abar = inv_mod(alpha, D0)
            num1 = m1 * D2 + m2 * D1 * alpha
            num2 = m1 * D2 * abar + m2 * D1
            assert num1 % (D0 * D0) == 0 and num2 % (D0 * D0) == 0
            total += D0 * kloosterman(n1, num1 // (D0 * D0), D1 // D0) \
                        * kloosterman(n2, num2 // (D0 * D0), D2 // D0)
    return total


def show(label, z):
    print(f"{label} = {z.real:+.15e} {z.imag:+.15e}i")


if __name__ == "__main__":
    show("S(1,1;1)", kloosterman(1, 1, 1))
    show("S(0,0;12) (= phi(12))", kloosterman(0, 0, 12))
    show("S(1,1;5)", kloosterman(1, 1, 5))
    show("S(2,3;7)", kloosterman(2, 3, 7))
    show("S(1,2;8)", kloosterman(1, 2, 8))
    print("weil |S(1,1;5)| =", abs(kloosterman(1, 1, 5)), "<= 2*sqrt(5) =", 2 * math.sqrt(5))
    show("c_q(0,7) (= phi(7))", ramanujan(0, 7))
    show("c_q(1,12) (= mu(12))", ramanujan(1, 12))
    show("c_q(6,4)", ramanujan(6, 4))
    print("divisor-sum c_q(6,4) =", ramanujan_divisor_sum(6, 4))
    show("Stilde(1,1,1;2,2)", gl3_short(1, 1, 1, 2, 2))
    show("Stilde(1,0,1;3,9)", gl3_short(1, 0, 1, 3, 9))
    show("Stilde(2,1,3;4,8)", gl3_short(2, 1, 3, 4, 8))
    show("Stilde(1,1,1;1,1)", gl3_short(1, 1, 1, 1, 1))
    print()
    print("KN decomposition spot checks (lhs = long sum, rhs = decomposition):")
    for (n1, m2, m1, n2, D1, D2) in [
        (1, 1, 1, 1, 1, 1),
        (1, 1, 1, 1, 2, 3),
        (2, 1, 1, 3, 4, 6),
        (1, 2, 2, 1, 6, 4),
        (1, 1, 1, 1, 4, 4),
        (0, 1, 2, 1, 3, 6),
        (1, 0, 0, 2, 5, 5),
    ]:
        lhs = gl3_long(n1, m2, m1, n2, D1, D2)
        lhs_alt = gl3_long(n1, m2, m1, n2, D1, D2, variant=1)
        rhs = kn_rhs(n1, m2, m1, n2, D1, D2)
        print(f"  ({n1},{m2},{m1},{n2};{D1},{D2}): lhs={lhs:.12g} rhs={rhs:.12g} "
              f"|lhs-rhs|={abs(lhs-rhs):.3e} |variantA-B|={abs(lhs-lhs_alt):.3e}")
    print()
    print("exhaustive KN check, D1*D2 <= 16, n,m in {0,1,2}^4:")
    worst = 0.0
    for D1 in range(1, 17):
        for D2 in range(1, 17):
            if D1 * D2 > 16:
                continue
            for n1 in range(3):
                for n2 in range(3):
                    for m1 in range(3):
                        for m2 in range(3):
                            d = abs(gl3_long(n1, m2, m1, n2, D1, D2) - kn_rhs(n1, m2, m1, n2, D1, D2))
                            worst = max(worst, d / (D1 * D2))
    print("  worst |lhs-rhs|/(D1*D2) =", worst)
