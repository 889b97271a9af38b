#include "gl3verify/arith.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gl3verify;

TEST_CASE("extended gcd solves Bezout") {
  for (int64_t a = -30; a <= 30; ++a)
    for (int64_t b = -30; b <= 30; ++b) {
      ExtendedGcd e = extended_gcd(a, b);
      REQUIRE(e.g == std::gcd(a, b));
      REQUIRE(a * e.x + b * e.y == e.g);
    }
}

TEST_CASE("modular inverse") {
  for (int64_t m = 1; m <= 40; ++m)
    for (int64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) {
        REQUIRE_THROWS_AS(inverse_mod(a, m), std::domain_error);
        continue;
      }
      int64_t x = inverse_mod(a, m);
      REQUIRE(x >= 0);
      REQUIRE(x < m);
      REQUIRE((a * x) % m == 1 % m);
    }
  REQUIRE(inverse_mod(7, 1) == 0);
  REQUIRE(inverse_mod(-3, 7) == inverse_mod(4, 7));
}

TEST_CASE("factorization round-trips and is sorted") {
  for (int64_t n = 1; n <= 5000; ++n) {
    int64_t prod = 1;
    int64_t last = 1;
    for (const auto& [p, e] : factorize(n)) {
      REQUIRE(p > last);
      REQUIRE(is_prime(p));
      last = p;
      prod *= ipow(p, e);
    }
    REQUIRE(prod == n);
  }
}

TEST_CASE("factorization cap is enforced") {
  // 1000003 is prime and exceeds the trial-division cap.
  REQUIRE_THROWS_AS(factorize(1000003), std::domain_error);
  // The cap itself is fine: 999983 is the largest prime below 10^6.
  REQUIRE(factorize(999983).size() == 1);
}

TEST_CASE("mobius and phi against direct sums") {
  // sum_{d | n} mu(d) = [n == 1], sum_{d | n} phi(d) = n.
  for (int64_t n = 1; n <= 2000; ++n) {
    int64_t mu_sum = 0, phi_sum = 0;
    for (int64_t d : divisors(n)) {
      mu_sum += mobius(d);
      phi_sum += euler_phi(d);
    }
    REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    REQUIRE(phi_sum == n);
  }
}

TEST_CASE("divisor list matches brute force") {
  for (int64_t n = 1; n <= 500; ++n) {
    std::vector<int64_t> brute;
    for (int64_t d = 1; d <= n; ++d)
      if (n % d == 0) brute.push_back(d);
    REQUIRE(divisors(n) == brute);
  }
}

TEST_CASE("prime sieve matches trial division") {
  std::vector<int64_t> sieve = primes_up_to(500);
  std::vector<int64_t> brute;
  for (int64_t n = 2; n <= 500; ++n)
    if (is_prime(n)) brute.push_back(n);
  REQUIRE(sieve == brute);
}

TEST_CASE("valuation") {
  REQUIRE(valuation(1, 2) == 0);
  REQUIRE(valuation(48, 2) == 4);
  REQUIRE(valuation(48, 3) == 1);
  REQUIRE(valuation(1000000, 10) == 6);
}
