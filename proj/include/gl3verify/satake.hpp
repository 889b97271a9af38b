#pragma once

// Degree-3 Hecke eigenvalue combinatorics at a single prime.
//
// A multiplicative coefficient family A(m, n) on GL(3) is determined by its
// prime-power values, and at a prime p with Satake parameters
// (alpha, beta, gamma), alpha*beta*gamma = 1, the value A(p^k, p^l) is the
// Schur polynomial s_{(k+l, k, 0)}(alpha, beta, gamma): a ratio of the
// generalized Vandermonde determinant with column exponents
// (k + l + 2, k + 1, 0) by the plain Vandermonde. This header provides
//
//   * schur_coeff        - division-free evaluation via the Jacobi-Trudi
//                          identity s_{(a,b,0)} = h_a h_b - h_{a+1} h_{b-1}
//                          in complete homogeneous polynomials h_m,
//   * schur_det_ratio    - the determinant-quotient definition, kept as an
//                          independent cross-check oracle,
//   * seq_value          - A(m, n) for general smooth m, n by
//                          multiplicativity,
//   * residual checks for the Hecke multiplication rules, the two Mobius
//                          inversion identities, and the two composite-index
//                          recursions they imply,
//   * rankin_local_series - both sides of the degree-9 local Rankin-Selberg
//                          factorization of sum_k A(1,p^k) A(p^k,1) x^k.
//
// All residual checks return a max-norm residual (0 for a correct family up
// to floating point); tolerances live with the callers.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gl3verify/arith.hpp"

namespace gl3verify {

using Complex = std::complex<double>;

// Satake parameters at one prime. The unitary/unramified normalizations used
// throughout have alpha*beta*gamma = 1; callers may verify with
// satisfies_invariants before trusting identity checks.
struct SatakeTriple {
  Complex alpha{1.0, 0.0};
  Complex beta{1.0, 0.0};
  Complex gamma{1.0, 0.0};

  bool satisfies_invariants(double tol = 1e-12) const {
    return std::abs(alpha * beta * gamma - Complex(1.0, 0.0)) <= tol;
  }
};

// Hecke eigenvalue value type. A(m, n) is complex; the family satisfies
// A(n, m) = conj(A(m, n)) for unitary normalizations.
using HeckeValue = Complex;

// Assignment of one Satake triple per prime. Primes not explicitly listed
// fall back to `fallback` (handy for sampling: only the primes dividing the
// indices under test matter).
struct ParamAssignment {
  std::map<int64_t, SatakeTriple> primes;
  SatakeTriple fallback;

  const SatakeTriple& at(int64_t p) const {
    auto it = primes.find(p);
    return it == primes.end() ? fallback : it->second;
  }
};

// Complete homogeneous symmetric polynomials h_0..h_maxdeg in the three
// Satake parameters, by the division-free recurrence: starting from the
// series 1, absorb one variable v at a time via
//   h_m <- h_m + v * h_{m-1}   (m ascending),
// which multiplies the coefficient table by 1/(1 - v x) in place; after all
// three variables the table holds the coefficients of
// 1/((1-ax)(1-bx)(1-cx)), i.e. exactly h_m(a, b, c).
inline std::vector<Complex> homogeneous_table(const SatakeTriple& t, int maxdeg) {
  std::vector<Complex> h(static_cast<std::size_t>(std::max(maxdeg, 0)) + 1,
                         Complex(0.0, 0.0));
  h[0] = Complex(1.0, 0.0);
  for (Complex v : {t.alpha, t.beta, t.gamma})
    for (int m = 1; m <= maxdeg; ++m) h[static_cast<std::size_t>(m)] += v * h[static_cast<std::size_t>(m - 1)];
  return h;
}

// A(p^k, p^l) = s_{(k+l, k, 0)}(alpha, beta, gamma), division-free.
// Values with a negative exponent are 0 by convention, which lets the
// recursion checks below run without boundary special-casing.
inline HeckeValue schur_coeff(const SatakeTriple& t, int64_t k, int64_t l) {
  if (k < 0 || l < 0) return HeckeValue(0.0, 0.0);
  int a = static_cast<int>(k + l);
  int b = static_cast<int>(k);
  // Jacobi-Trudi for a two-row partition (a, b, 0):
  //   s = h_a h_b - h_{a+1} h_{b-1},   h_{-1} = 0.
  std::vector<Complex> h = homogeneous_table(t, a + 1);
  Complex second = (b >= 1) ? h[static_cast<std::size_t>(a + 1)] * h[static_cast<std::size_t>(b - 1)]
                            : Complex(0.0, 0.0);
  return h[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(b)] - second;
}

// Independent oracle: the bialternant definition, a ratio of 3x3
// determinants with column exponent vectors (k+l+2, k+1, 0) over (2, 1, 0).
// Requires the parameters to be pairwise distinct (generic sampling
// guarantees this); used only to cross-check schur_coeff.
inline HeckeValue schur_det_ratio(const SatakeTriple& t, int64_t k, int64_t l) {
  if (k < 0 || l < 0) return HeckeValue(0.0, 0.0);
  auto det3 = [](const SatakeTriple& s, int e0, int e1, int e2) {
    auto col = [&](Complex v, int e) { return std::pow(v, Complex(static_cast<double>(e), 0.0)); };
    Complex a0 = col(s.alpha, e0), a1 = col(s.alpha, e1), a2 = col(s.alpha, e2);
    Complex b0 = col(s.beta, e0), b1 = col(s.beta, e1), b2 = col(s.beta, e2);
    Complex c0 = col(s.gamma, e0), c1 = col(s.gamma, e1), c2 = col(s.gamma, e2);
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
  };
  int K = static_cast<int>(k), L = static_cast<int>(l);
  Complex num = det3(t, K + L + 2, K + 1, 0);
  Complex den = det3(t, 2, 1, 0);
  if (std::abs(den) < 1e-300)
    throw std::domain_error("schur_det_ratio: coincident parameters");
  return num / den;
}

// A(m, n) for general indices by multiplicativity across prime powers.
// Factorization is trial division; arguments with a prime factor above the
// cap are refused (see arith.hpp).
inline HeckeValue seq_value(const ParamAssignment& a, int64_t m, int64_t n) {
  if (m < 1 || n < 1) throw std::domain_error("seq_value: indices must be >= 1");
  HeckeValue out(1.0, 0.0);
  for (const auto& [p, e] : factorize(m)) {
    (void)e;
    out *= schur_coeff(a.at(p), valuation(m, p), valuation(n, p));
  }
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    if (m % p == 0) continue;  // handled above
    out *= schur_coeff(a.at(p), 0, valuation(n, p));
  }
  return out;
}

// Hecke multiplication rules. With A := seq_value, for every n, m1, m2:
//
//   A(n,1) A(m1,m2) = sum_{d0 d1 d2 = n, d1 | m1, d2 | m2}
//                         A(m1 d0 / d1, m2 d1 / d2),
//   A(1,n) A(m1,m2) = sum_{d0 d1 d2 = n, d1 | m1, d2 | m2}
//                         A(m1 d2 / d1, m2 d0 / d2),
//
// together with the Hermitian symmetry A(m, n) = conj(A(n, m)). Returns the
// largest of the three absolute defects.
inline double check_hecke_relations(const ParamAssignment& a, int64_t n,
                                    int64_t m1, int64_t m2) {
  HeckeValue lhs1 = seq_value(a, n, 1) * seq_value(a, m1, m2);
  HeckeValue lhs2 = seq_value(a, 1, n) * seq_value(a, m1, m2);
  HeckeValue rhs1(0.0, 0.0), rhs2(0.0, 0.0);
  for (int64_t d1 : divisors(n)) {
    if (m1 % d1 != 0) continue;
    for (int64_t d2 : divisors(n / d1)) {
      if (m2 % d2 != 0) continue;
      int64_t d0 = n / (d1 * d2);
      rhs1 += seq_value(a, m1 * d0 / d1, m2 * d1 / d2);
      rhs2 += seq_value(a, m1 * d2 / d1, m2 * d0 / d2);
    }
  }
  double r = std::abs(lhs1 - rhs1);
  r = std::max(r, std::abs(lhs2 - rhs2));
  r = std::max(r, std::abs(seq_value(a, m1, m2) - std::conj(seq_value(a, m2, m1))));
  return r;
}

// Mobius-inverted forms of the multiplication rules:
//
//   (i)  A(m, n)  = sum_{d | (m, n)} mu(d) A(m/d, 1) A(1, n/d),
//   (ii) A(mn, 1) = sum_{a b c = n, b | c, c | m}
//                       mu(b) mu(c) A(m/c, c/b) A(a, 1).
//
// Returns the larger of the two absolute defects.
inline double check_mobius_identities(const ParamAssignment& a, int64_t m, int64_t n) {
  HeckeValue rhs1(0.0, 0.0);
  int64_t g = std::gcd(m, n);
  for (int64_t d : divisors(g)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    rhs1 += static_cast<double>(mu) * seq_value(a, m / d, 1) * seq_value(a, 1, n / d);
  }
  double r = std::abs(seq_value(a, m, n) - rhs1);

  HeckeValue rhs2(0.0, 0.0);
  for (int64_t c : divisors(n)) {
    if (m % c != 0) continue;
    int muc = mobius(c);
    if (muc == 0) continue;
    for (int64_t b : divisors(n / c)) {
      if (c % b != 0) continue;  // chained divisibility b | c | m
      int mub = mobius(b);
      if (mub == 0) continue;
      int64_t av = n / (b * c);
      rhs2 += static_cast<double>(mub * muc) * seq_value(a, m / c, c / b) *
              seq_value(a, av, 1);
    }
  }
  r = std::max(r, std::abs(seq_value(a, m * n, 1) - rhs2));
  return r;
}

// Composite-first-index recursion and its transpose:
//
//   A(n1 n2, m) = sum_{a b c = n1, b | m c, c | n2}
//                     mu(b) mu(c) A(n2/c, m c / b) A(a, 1),
//   A(m, n1 n2) = sum_{a b c = n1, b | m c, c | n2}
//                     mu(b) mu(c) A(m c / b, n2/c) A(1, a).
//
// Returns the larger of the two absolute defects.
inline double check_lemma_hecke(const ParamAssignment& a, int64_t n1, int64_t n2,
                                int64_t m) {
  HeckeValue rhs1(0.0, 0.0), rhs2(0.0, 0.0);
  for (int64_t c : divisors(n1)) {
    if (n2 % c != 0) continue;
    int muc = mobius(c);
    if (muc == 0) continue;
    for (int64_t b : divisors(n1 / c)) {
      if ((m * c) % b != 0) continue;
      int mub = mobius(b);
      if (mub == 0) continue;
      int64_t av = n1 / (b * c);
      double sign = static_cast<double>(mub * muc);
      rhs1 += sign * seq_value(a, n2 / c, m * c / b) * seq_value(a, av, 1);
      rhs2 += sign * seq_value(a, m * c / b, n2 / c) * seq_value(a, 1, av);
    }
  }
  double r = std::abs(seq_value(a, n1 * n2, m) - rhs1);
  r = std::max(r, std::abs(seq_value(a, m, n1 * n2) - rhs2));
  return r;
}

// Local Rankin-Selberg factorization. With B(k) := A(1,p^k) A(p^k,1) the
// generating series satisfies
//
//   sum_k B(k) x^k = [ prod_{i,j} (1 - a_i conj(a_j) x)^{-1} ]
//                    * (1 - x^2 - x^4 + x^6 + A(p,p) (-x^2 + 2x^3 - x^4)),
//
// a degree-9 identity of formal power series. Returns both sides' Taylor
// coefficients through x^order so callers can diff them. `order` is capped
// at 20 (the identity is exact at every order; the cap only bounds work).
struct RankinSeries {
  std::vector<Complex> lhs;
  std::vector<Complex> rhs;
};

inline RankinSeries rankin_local_series(const SatakeTriple& t, int order) {
  if (order < 0 || order > 20)
    throw std::domain_error("rankin_local_series: order must be in [0, 20]");
  std::size_t n = static_cast<std::size_t>(order) + 1;
  RankinSeries out;
  out.lhs.resize(n);
  out.rhs.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.lhs[k] = schur_coeff(t, 0, static_cast<int64_t>(k)) *
                 schur_coeff(t, static_cast<int64_t>(k), 0);

  // Expand prod_{i,j} (1 - a_i conj(a_j) x)^{-1} as a power series: multiply
  // nine geometric series, truncating at x^order.
  std::vector<Complex> series(n, Complex(0.0, 0.0));
  series[0] = Complex(1.0, 0.0);
  const Complex params[3] = {t.alpha, t.beta, t.gamma};
  for (const Complex& ai : params)
    for (const Complex& aj : params) {
      Complex q = ai * std::conj(aj);
      // Multiply `series` by 1/(1 - q x): new[k] = sum_{j<=k} old[j] q^{k-j},
      // computed in place via new[k] = old[k] + q * new[k-1].
      for (std::size_t k = 1; k < n; ++k) series[k] += q * series[k - 1];
    }

  // Correction polynomial 1 - x^2 - x^4 + x^6 + A(p,p)(-x^2 + 2x^3 - x^4).
  Complex app = schur_coeff(t, 1, 1);
  std::vector<Complex> corr(7, Complex(0.0, 0.0));
  corr[0] = Complex(1.0, 0.0);
  corr[2] = Complex(-1.0, 0.0) - app;
  corr[3] = 2.0 * app;
  corr[4] = Complex(-1.0, 0.0) - app;
  corr[6] = Complex(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j <= k && j < corr.size(); ++j)
      acc += corr[j] * series[k - j];
    out.rhs[k] = acc;
  }
  return out;
}

// Convenience: max |lhs_k - rhs_k| over 0 <= k <= order.
inline double rankin_residual(const SatakeTriple& t, int order) {
  RankinSeries s = rankin_local_series(t, order);
  double r = 0.0;
  for (std::size_t k = 0; k < s.lhs.size(); ++k)
    r = std::max(r, std::abs(s.lhs[k] - s.rhs[k]));
  return r;
}

}  // namespace gl3verify
