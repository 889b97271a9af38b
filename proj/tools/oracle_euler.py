#!/usr/bin/env python3
"""Independent transliteration of the local Euler-factor sum.

Validates the nine-block summation plan against the closed form
B(1,p^m) * ((1+p^-2)(1-p^-2)^2 - p^-2 (1-1/p)^2 B(p,p)) before the C++
implementation exists, and prints a few frozen block values.
Run: python3 oracle_euler.py
"""
import cmath
import itertools
import math

# ---- Hecke coefficients via complete homogeneous symmetric polynomials ----


def h_full(vals, maxdeg):
    """h[m] for m in 0..maxdeg over the given variables, division-free DP."""
    h = [1.0 + 0j] + [0j] * maxdeg
    for v in vals:
        for m in range(1, maxdeg + 1):
            # h_new[m] = sum_{j<=m} h_old[j] v^{m-j}  == h_old[m] + v*h_new[m-1]
            h[m] = h[m] + v * h[m - 1]
    return h


def make_B(triple, kmax=12, lmax=30):
    h = h_full(triple, kmax + lmax + 2)

    def B(k, l):
        if k < 0 or l < 0:
            return 0j
        return h[k + l] * h[k] - h[k + l + 1] * (h[k - 1] if k >= 1 else 0j)
    return B


# ---- the listing, symbol for symbol ----

VARS = ["tau10", "r0", "r", "s", "g0", "g", "h1", "h2", "c0", "omega",
        "omega0", "a", "a0", "b", "d", "n1", "m0", "n10", "nu0", "alpha0",
        "alpha", "nu", "d0", "f0", "d01", "d10", "d20"]


def summand(v, m, p, B):
    tau10 = v["tau10"]; r0 = v["r0"]; r = v["r"]; s = v["s"]; g0 = v["g0"]
    g = v["g"]; h1 = v["h1"]; h2 = v["h2"]; c0 = v["c0"]; omega = v["omega"]
    omega0 = v["omega0"]; a = v["a"]; a0 = v["a0"]; b = v["b"]; d = v["d"]
    n1 = v["n1"]; m0 = v["m0"]; n10 = v["n10"]; nu0 = v["nu0"]
    alpha0 = v["alpha0"]; alpha = v["alpha"]; nu = v["nu"]; d0 = v["d0"]
    f0 = v["f0"]; d01 = v["d01"]; d10 = v["d10"]; d20 = v["d20"]

    A = m0 + alpha0 + omega0 + nu0 + nu + tau10 + n10 + r0 + s + d20 + f0 + g0
    Bc = alpha0 + omega0 + nu0 + nu + tau10 + n10 + d20 + f0 + g0 + g + h1 - n1
    x = (a + b + m0 + n1 + r + s + 2 * g - 2 * alpha0 - alpha + omega + alpha0
         + omega0 + nu + s - d0 - min(g, alpha0 + omega0 + nu) + nu0 + tau10
         + r0 + f0 + g0 + h1 + h2)
    M = (2 * r0 + n10 + alpha0 + alpha + omega0 + omega + nu0 + nu + tau10
         + m0 + n1 + s
         - min(r + s + 3 * g + 2 * h1 + b,
               r0 + m0 + n1
               + min(alpha0 + alpha + omega0 + omega + nu0 + nu + tau10 + n10 + r0 + s,
                     alpha + omega + a + g
                     - min(alpha + omega + a, d20 + f0 + g0 + m0 + g)
                     + 20 * (d0 + d20 + f0 + g0 + m0 + g
                             - min(alpha + omega + a, d20 + f0 + g0 + m0 + g)))))
    y = nu0 + tau10 + r0 + f0 + g0 + nu + r + s + g + h1 + m0 + omega0 + a0

    def delta(aa, bb):
        return 0 if (bb == 0 and aa > 0) else 1

    guards = [
        tau10 + r0 + r + s + g0 + g + h1 + h2 <= 1,
        c0 + r0 <= 1,
        a0 + a <= 1,
        r0 + omega0 + omega - min(r0, d10) <= 1,
        (d - min(d, x)) * y == 0,
        (tau10 + r0 + g0) * nu0 == 0,
        f0 * (tau10 + g0) == 0,
        d01 * (tau10 + n10 + r0 + d10 + d20 + g0) == 0,
        d10 * (nu0 + d20 + g0) == 0,
        d20 * (nu0 + tau10 + r0) == 0,
        min(d10, r0, f0) == 0,
        (nu + r + s + g + h1 + h2) * (nu0 + tau10 + r0 + f0 + g0) == 0,
        (nu + r + s + g + h1) * h2 == 0,
        c0 * (nu0 + d01 + d10) == 0,
        n1 * d20 == 0,
        m0 * (nu + g - min(n1, nu + g) + nu0 + tau10 + r0 + f0 + g0 + h1 + h2) == 0,
        (f0 + g0 + m0 + g - alpha - omega) * (m0 + n1 + r + r0 + s + 2 * g - 2 * alpha0 - 2 * alpha) == 0,
        omega0 * (alpha + nu0 + tau10 + r0 + f0 + g0 + h1 + h2) == 0,
        a0 * (m0 + n1 + r + s + 2 * g - 2 * alpha0 - alpha + omega + nu0 + tau10 + r0 + f0 + g0 + h1 + h2) == 0,
        b * (a0 + d20 + f0 + g0 + m0 + g - alpha - omega) == 0,
        d0 * (a + b + m0 + n1 + r + s + 2 * g - 2 * alpha0 - alpha + omega + h1) == 0,
        M <= m,
        c0 <= f0,
        n1 <= nu0 + nu + tau10 + n10 + f0 + g0 + g + h1,
        alpha0 <= min(r + s + 2 * g, m0 + n1),
        alpha <= min(m0 + g, r + s + 2 * g - alpha0, m0 + n1 - alpha0),
        alpha + omega <= f0 + g0 + m0 + g,
        m0 + n1 + g <= alpha0 + alpha + omega0 + omega + nu0 + nu + tau10 + n10 + min(m0 + n1, g + h1),
        a <= A,
        b <= Bc,
        d0 <= alpha0 + omega0 + nu + s - min(g, alpha0 + omega0 + nu),
        delta(n10 + d01 + d10 + d20, nu0 + tau10 + r0 + f0 + g0) == 1,
    ]
    if not all(guards):
        return 0j

    def P(n):
        return 1.0 / (1.0 - p ** (-n))

    sign = (-1) ** (tau10 + r + g0 + h2 + c0 + a0 + a + b + d + r0 + omega0
                    + omega - min(r0, d10))
    pexp = (-3 * nu0 - nu - 6 * tau10 - n10 - 4 * r0 - 2 * r - 3 * s - 2 * d01
            - d10 - d20 - 3 * f0 - 5 * g0 - 4 * g - 4 * h1 - 3 * h2
            + min(r0, d10) - c0 + alpha - m0 - omega0 - 2 * a0 - a - b - d0
            - 3 * d + 2 * min(d, x))
    val = sign * (p ** pexp) \
        * B(m0 + n1, r + 3 * g + 3 * h1 - 2 * (r0 + m0 + n1) + m) \
        * B(r0 + r, 0)
    if tau10:
        val *= p ** (tau10 - 1) * (p - 1)
    if y == 0:
        val *= P(2)
    if f0 == 3:
        val *= P(3)
    if d01 == 1:
        val *= P(2)
    if d10 == 1:
        val *= P(1)
    if d20 == 1:
        val *= P(1)
    if nu0 + r0 + d01 + f0 >= 1 and c0 + r0 + d20 - min(r0, d10) == 0:
        val *= 1 - 1.0 / p
    return val


# Per-block ranges: {var: (lo, hi)} overriding the common defaults.
COMMON = dict(tau10=(0, 0), r0=(0, 0), r=(0, 0), s=(0, 0), g0=(0, 0), g=(0, 0),
              h1=(0, 0), h2=(0, 0), c0=(0, 0), omega=(0, 1), omega0=(0, 1),
              a=(0, 1), a0=(0, 1), b=(0, 1), d=(0, 1), n1=(0, 1), m0=(0, 1),
              n10=(0, 2), nu0=(0, 3), alpha0=(0, 0), alpha=(0, 0), nu=(0, 3),
              d0=(0, 2), f0=(0, 0), d01=(0, 0), d10=(0, 0), d20=(0, 0))


def block(**over):
    rng = dict(COMMON)
    rng.update(over)
    return rng


BLOCKS = [
    block(h2=(1, 1)),
    block(h1=(1, 1), n1=(0, 2), m0=(0, 2), nu=(0, 5)),
    block(g=(1, 1), n1=(0, 2), m0=(0, 2), alpha0=(0, 2), alpha=(0, 2),
          nu=(0, 6), d0=(0, 5)),
    block(g0=(1, 1), d20=(0, 1)),
    block(s=(1, 1), alpha0=(0, 1), alpha=(0, 1), nu=(0, 4), d0=(0, 3)),
    block(r=(1, 1), n1=(0, 2), m0=(0, 2), alpha0=(0, 1), alpha=(0, 1),
          nu=(0, 4), d0=(0, 3)),
    block(r0=(1, 1), c0=(0, 1), d10=(0, 1)),
    block(tau10=(1, 1), d10=(0, 1)),
    block(c0=(0, 1), f0=(0, 3), d01=(0, 1), d10=(0, 1), d20=(0, 1)),
]


def euler_factor(p, m, B):
    total = 0j
    for rng in BLOCKS:
        ranges = [range(rng[name][0], rng[name][1] + 1) for name in VARS]
        for combo in itertools.product(*ranges):
            total += summand(dict(zip(VARS, combo)), m, p, B)
    return total


def closed_form(p, m, B):
    return B(0, m) * ((1 + p ** -2) * (1 - p ** -2) ** 2
                      - p ** -2 * (1 - 1.0 / p) ** 2 * B(1, 1))


if __name__ == "__main__":
    triples = {
        "(1,1,1)": (1.0 + 0j, 1.0 + 0j, 1.0 + 0j),
        "generic": tuple(cmath.exp(1j * t) for t in (0.9, 2.1, -3.0)),
    }
    # normalize generic to product exactly 1
    a, b, c = triples["generic"]
    triples["generic"] = (a, b, 1.0 / (a * b))

    for name, t in triples.items():
        B = make_B(list(t))
        print(f"triple {name}: B(p,p) = {B(1,1):.12g}  B(1,p) = {B(0,1):.12g}")
        for p in (2, 3):
            for m in (0, 1, 2):
                ef = euler_factor(p, m, B)
                cf = closed_form(p, m, B)
                rel = abs(ef - cf) / (1 + abs(cf))
                print(f"  p={p} m={m}: euler = {ef:.12g}  closed = {cf:.12g}  relerr = {rel:.3e}")
    # frozen spot values for the C++ tests
    B = make_B([1.0 + 0j, 1.0 + 0j, 1.0 + 0j])
    print()
    print("closed_form(p=2, m=0, (1,1,1)) =", closed_form(2, 0, B), " (expect 13/64 =", 13 / 64, ")")
    zero = {k: 0 for k in VARS}
    print("summand(all-zero, p=2, m=0) =", summand(zero, 0, 2, B), " (expect P[2] = 4/3)")
    h2v = dict(zero, h2=1)
    print("summand(h2=1, p=2, m=0) =", summand(h2v, 0, 2, B), " (expect -p^-3 * P[2] = -1/6)")
