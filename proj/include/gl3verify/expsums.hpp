#pragma once

// Exponential sums attached to the GL(3) Fourier expansion: classical
// Kloosterman sums, Ramanujan sums, and the two GL(3) Weyl-element sums
// (the rank-one "short" sum and the long-element sum), together with the
// factorization of the long-element sum into a divisor-weighted product of
// classical Kloosterman sums.
//
// Everything is evaluated by direct enumeration over residues, with phases
// reduced to exact rationals k/D before exponentiation, so results are
// accurate to ~1e-14 * (number of terms). The long-element enumeration
// replaces the scan over its fourth residue variable by solving the linear
// congruence that pins it down (an exact transformation, noted inline).

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gl3verify/arith.hpp"

namespace gl3verify {

namespace expsums_detail {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// (a * b) mod m without overflow, result in [0, m).
inline int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  using i128 = __int128;
  i128 r = (i128(a) * i128(b)) % m;
  if (r < 0) r += m;
  return static_cast<int64_t>(r);
}

inline int64_t addmod(int64_t a, int64_t b, int64_t m) {
  int64_t r = (a % m + b % m) % m;
  if (r < 0) r += m;
  return r;
}

inline int64_t normmod(int64_t a, int64_t m) {
  int64_t r = a % m;
  if (r < 0) r += m;
  return r;
}

// e(k / D) for integer k, D >= 1.
inline std::complex<double> e_frac(int64_t k, int64_t D) {
  return std::polar(1.0, kTwoPi * static_cast<double>(normmod(k, D)) /
                             static_cast<double>(D));
}

// Solve Y*B + Z*C == 1 (mod D) for gcd(B, C, D) = 1. Canonical choice via
// two extended-gcd steps; `variant` = 1 picks the equally valid alternative
// (Y + C, Z - B) mod D, used by tests to confirm the long-element sum does
// not depend on the choice (the phase shifts by an integer).
struct YZPair {
  int64_t y;
  int64_t z;
};

inline YZPair yz_pair(int64_t B, int64_t C, int64_t D, int variant = 0) {
  if (D == 1) return {0, 0};
  int64_t b = normmod(B, D), c = normmod(C, D);
  ExtendedGcd g1 = extended_gcd(b, c);
  int64_t g = g1.g, u = g1.x, v = g1.y;
  if (g == 0) {
    // b = c = 0 cannot happen for D > 1 when gcd(B, C, D) = 1.
    throw std::domain_error("yz_pair: gcd(B, C, D) != 1");
  }
  int64_t w = inverse_mod(g, D);
  int64_t y = mulmod(u, w, D), z = mulmod(v, w, D);
  if (variant) {
    y = addmod(y, c, D);
    z = addmod(z - b, 0, D);
  }
  return {y, z};
}

}  // namespace expsums_detail

// Classical Kloosterman sum S(n, m; c) = sum_{x mod c, (x,c)=1}
// e((n x + m xbar)/c). S(n, m; 1) = 1 (empty modulus, single residue).
inline std::complex<double> kloosterman(int64_t n, int64_t m, int64_t c) {
  using namespace expsums_detail;
  if (c < 1) throw std::domain_error("kloosterman: modulus must be >= 1");
  if (c == 1) return {1.0, 0.0};
  std::complex<double> total(0.0, 0.0);
  int64_t nr = normmod(n, c), mr = normmod(m, c);
  for (int64_t x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    int64_t xbar = inverse_mod(x, c);
    total += e_frac(addmod(mulmod(nr, x, c), mulmod(mr, xbar, c), c), c);
  }
  return total;
}

// Ramanujan sum c_q(n) = sum_{x mod q, (x,q)=1} e(n x / q), by enumeration.
inline std::complex<double> ramanujan(int64_t n, int64_t q) {
  using namespace expsums_detail;
  if (q < 1) throw std::domain_error("ramanujan: modulus must be >= 1");
  std::complex<double> total(0.0, 0.0);
  for (int64_t x = 0; x < q; ++x) {
    if (std::gcd(x, q) != 1) continue;
    total += e_frac(n * (x % q), q);
  }
  if (q == 1) total = {1.0, 0.0};
  return total;
}

// Closed form: c_q(n) = sum_{d | (n, q)} d * mu(q / d). Exact integer; kept
// as the cross-check for the enumeration above.
inline int64_t ramanujan_divisor_sum(int64_t n, int64_t q) {
  int64_t g = (n == 0) ? q : std::gcd(std::abs(n), q);
  int64_t total = 0;
  for (int64_t d : divisors(q))
    if (g % d == 0) total += d * mobius(q / d);
  return total;
}

// Rank-one ("short") GL(3) Weyl sum
//   Stilde(n1, n2, m1; D1, D2)
//     = sum_{C1 mod D1, (C1, D1) = 1} sum_{C2 mod D2, (C2, q) = 1}
//         e( n2 C1bar C2 / D1 + m1 C2bar / q + n1 C1 / D1 ),
// where q = D2 / D1 (requires D1 | D2), C1bar inverts C1 mod D1 and C2bar
// inverts C2 mod q (the m1 term is dropped when q = 1, where it is an
// integer phase).
inline std::complex<double> gl3_short(int64_t n1, int64_t n2, int64_t m1,
                                      int64_t D1, int64_t D2) {
  using namespace expsums_detail;
  if (D1 < 1 || D2 < 1) throw std::domain_error("gl3_short: moduli must be >= 1");
  if (D2 % D1 != 0)
    throw std::domain_error("gl3_short: requires D1 | D2");
  int64_t q = D2 / D1;
  std::complex<double> total(0.0, 0.0);
  for (int64_t C1 = 0; C1 < D1; ++C1) {
    if (std::gcd(C1, D1) != 1) continue;
    int64_t C1bar = (D1 == 1) ? 0 : inverse_mod(C1, D1);
    for (int64_t C2 = 0; C2 < D2; ++C2) {
      if (std::gcd(C2, q) != 1) continue;
      // phase = n2 C1bar C2 / D1 + m1 C2bar / q + n1 C1 / D1
      std::complex<double> term =
          e_frac(addmod(mulmod(normmod(n2, D1), mulmod(C1bar, C2 % D1, D1), D1),
                        mulmod(normmod(n1, D1), C1, D1), D1),
                 D1);
      if (q > 1) {
        int64_t C2bar = inverse_mod(C2 % q, q);
        term *= e_frac(mulmod(normmod(m1, q), C2bar, q), q);
      }
      total += term;
    }
  }
  return total;
}

// Long-element GL(3) Kloosterman sum S(n1, m2, m1, n2; D1, D2):
//
//   sum over B1, C1 mod D1 and B2, C2 mod D2 with gcd(Bj, Cj, Dj) = 1 and
//   D1 C2 + B1 B2 + D2 C1 == 0 (mod D1 D2), of
//     e( (n1 B1 + m1 (Y1 D2 - Z1 B2)) / D1
//        + (m2 B2 + n2 (Y2 D1 - Z2 B1)) / D2 ),
//   where Yj Bj + Zj Cj == 1 (mod Dj).
//
// The value does not depend on the choice of (Yj, Zj): replacing (Y, Z) by
// the other solutions (Y + kC, Z - kB) shifts the phase by the integer
// k (C D2 - B B2)/D1-type terms, which the congruence makes integral.
// Enumeration note: for fixed (B1, C1, B2) the congruence determines C2
// mod D2 uniquely when D1 | (B1 B2 + D2 C1 mod D1), and has no solution
// otherwise, so the fourth loop is replaced by solving the congruence
// (exactly equivalent to scanning C2, verified against the scan).
inline std::complex<double> gl3_long(int64_t n1, int64_t m2, int64_t m1,
                                     int64_t n2, int64_t D1, int64_t D2,
                                     int yz_variant = 0) {
  using namespace expsums_detail;
  if (D1 < 1 || D2 < 1) throw std::domain_error("gl3_long: moduli must be >= 1");
  const int64_t D12 = D1 * D2;
  std::complex<double> total(0.0, 0.0);
  for (int64_t B1 = 0; B1 < D1; ++B1) {
    for (int64_t C1 = 0; C1 < D1; ++C1) {
      if (std::gcd(std::gcd(B1, C1), D1) != 1) continue;
      YZPair p1 = yz_pair(B1, C1, D1, yz_variant);
      for (int64_t B2 = 0; B2 < D2; ++B2) {
        // Solve D1 * C2 == -(B1 B2 + D2 C1) (mod D1 D2) for C2 in [0, D2):
        // the left side runs over the D2 distinct multiples of D1 mod D1*D2,
        // so there is a solution iff D1 divides the right side, and then it
        // is unique: C2 = R / D1 with R the reduced right side.
        int64_t R = normmod(-(mulmod(B1, B2, D12) + mulmod(D2, C1, D12)), D12);
        if (R % D1 != 0) continue;
        int64_t C2 = R / D1;
        if (std::gcd(std::gcd(B2, C2), D2) != 1) continue;
        YZPair p2 = yz_pair(B2, C2, D2, yz_variant);
        int64_t k1 = addmod(mulmod(normmod(n1, D1), B1, D1),
                            mulmod(normmod(m1, D1),
                                   normmod(p1.y * D2 % D1 - mulmod(p1.z, B2 % D1, D1), D1), D1),
                            D1);
        int64_t k2 = addmod(mulmod(normmod(m2, D2), B2, D2),
                            mulmod(normmod(n2, D2),
                                   normmod(p2.y * D1 % D2 - mulmod(p2.z, B1 % D2, D2), D2), D2),
                            D2);
        total += e_frac(k1, D1) * e_frac(k2, D2);
      }
    }
  }
  return total;
}

// Divisor-weighted factorization of the long-element sum into classical
// Kloosterman sums:
//
//   S(n1, m2, m1, n2; D1, D2)
//     = sum_{D0 | (D1, D2)} D0
//         sum*_{alpha mod D0 : m1 (D2/D0) + m2 (D1/D0) alpha == 0 mod D0}
//           S(n1, (m1 D2 + m2 D1 alpha) / D0^2 ; D1 / D0)
//           * S(n2, (m1 D2 alphabar + m2 D1) / D0^2 ; D2 / D0),
//
// where alphabar alpha == 1 (mod D0). Both numerators are divisible by
// D0^2 whenever the alpha-congruence holds (for the second: multiply the
// congruence by alphabar), and replacing the integer lift alpha by
// alpha + k D0 shifts each Kloosterman argument by a multiple of its
// modulus, so the right side is well defined.
inline std::complex<double> kn_rhs(int64_t n1, int64_t m2, int64_t m1,
                                   int64_t n2, int64_t D1, int64_t D2) {
  using namespace expsums_detail;
  std::complex<double> total(0.0, 0.0);
  int64_t g12 = std::gcd(D1, D2);
  for (int64_t D0 : divisors(g12)) {
    int64_t q1 = D2 / D0, q2 = D1 / D0;
    // alpha runs over the units mod D0; for D0 = 1 that is the single
    // residue alpha = 0 with alphabar = 0.
    int64_t alpha_lo = (D0 == 1) ? 0 : 1;
    for (int64_t alpha = alpha_lo; alpha < std::max<int64_t>(D0, alpha_lo + 1); ++alpha) {
      if (D0 > 1 && std::gcd(alpha, D0) != 1) continue;
      if (normmod(m1 * q1 + m2 * q2 * alpha, D0) != 0) continue;
      int64_t abar = (D0 == 1) ? 0 : inverse_mod(alpha, D0);
      int64_t num1 = m1 * D2 + m2 * D1 * alpha;
      int64_t num2 = m1 * D2 * abar + m2 * D1;
      if (num1 % (D0 * D0) != 0 || num2 % (D0 * D0) != 0)
        throw std::logic_error("kn_rhs: non-integral Kloosterman argument");
      total += static_cast<double>(D0) *
               kloosterman(n1, num1 / (D0 * D0), D1 / D0) *
               kloosterman(n2, num2 / (D0 * D0), D2 / D0);
    }
  }
  return total;
}

// Max-norm residual of the factorization at one parameter tuple.
inline double kn_residual(int64_t n1, int64_t m2, int64_t m1, int64_t n2,
                          int64_t D1, int64_t D2) {
  return std::abs(gl3_long(n1, m2, m1, n2, D1, D2) -
                  kn_rhs(n1, m2, m1, n2, D1, D2));
}

// Worst Weil-bound defect max(0, |S(n, m; p)| - 2 sqrt(p)) over all
// 1 <= n, m < p for a prime p.
inline double weil_defect(int64_t p) {
  if (!is_prime(p)) throw std::domain_error("weil_defect: p must be prime");
  double bound = 2.0 * std::sqrt(static_cast<double>(p));
  double worst = 0.0;
  for (int64_t n = 1; n < p; ++n)
    for (int64_t m = 1; m < p; ++m)
      worst = std::max(worst, std::abs(kloosterman(n, m, p)) - bound);
  return std::max(0.0, worst);
}

}  // namespace gl3verify
