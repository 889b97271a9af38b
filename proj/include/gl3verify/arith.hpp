#pragma once

// Elementary multiplicative number theory over int64: extended gcd, modular
// inverses, Mobius function, Euler phi, divisor lists, and trial-division
// factorization. Everything here is exact integer arithmetic; the rest of
// the toolkit builds on these primitives for Hecke multiplicativity checks,
// exponential-sum enumeration, and local Euler factors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gl3verify {

using std::int64_t;
using std::uint64_t;

// Largest modulus we factor by trial division. Inputs whose unfactored part
// exceeds this are refused with an explicit error instead of silently
// returning a wrong factorization.
inline constexpr int64_t kFactorizationCap = 1000000;

// Extended Euclid: returns g = gcd(a, b) >= 0 and x, y with a*x + b*y = g.
struct ExtendedGcd {
  int64_t g;
  int64_t x;
  int64_t y;
};

inline ExtendedGcd extended_gcd(int64_t a, int64_t b) {
  // Iterative version to keep the cofactors small and avoid deep recursion.
  int64_t old_r = a, r = b;
  int64_t old_x = 1, x = 0;
  int64_t old_y = 0, y = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

// Inverse of a modulo m (m >= 1), in [0, m). Requires gcd(a, m) = 1.
inline int64_t inverse_mod(int64_t a, int64_t m) {
  if (m <= 0) throw std::domain_error("inverse_mod: modulus must be positive");
  a %= m;
  if (a < 0) a += m;
  if (m == 1) return 0;
  ExtendedGcd e = extended_gcd(a, m);
  if (e.g != 1)
    throw std::domain_error("inverse_mod: argument not coprime to modulus");
  int64_t x = e.x % m;
  if (x < 0) x += m;
  return x;
}

// Trial-division factorization of n >= 1 as (prime, exponent) pairs in
// increasing prime order. Throws if a cofactor above the cap squared
// remains, i.e. if some prime factor might exceed kFactorizationCap.
inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n && p <= kFactorizationCap; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) {
    if (n > kFactorizationCap)
      throw std::domain_error(
          "factorize: prime factor exceeds trial-division cap " +
          std::to_string(kFactorizationCap));
    out.emplace_back(n, 1);
  }
  return out;
}

// Mobius function: mu(1) = 1, mu(n) = (-1)^k for squarefree n with k prime
// factors, 0 if n has a squared factor.
inline int mobius(int64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// Euler totient.
inline int64_t euler_phi(int64_t n) {
  int64_t out = n;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    out -= out / p;
  }
  return out;
}

// All positive divisors of n, sorted increasing.
inline std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t base = out.size();
    int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

// Primes up to and including n, by sieve.
inline std::vector<int64_t> primes_up_to(int64_t n) {
  std::vector<int64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (int64_t p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (int64_t q = p * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = true;
  }
  return out;
}

// p-adic valuation v_p(n) for n >= 1.
inline int valuation(int64_t n, int64_t p) {
  if (n < 1 || p < 2) throw std::domain_error("valuation: bad arguments");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// Integer power p^e (no overflow checks beyond debug assertions; callers
// keep exponents small).
inline int64_t ipow(int64_t p, int e) {
  int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

}  // namespace gl3verify
