#include "gl3verify/kernels.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "gl3verify/rng.hpp"

using namespace gl3verify;
using C = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

double rel(C got, C want) {
  double d = std::abs(want);
  return std::abs(got - want) / (d > 0 ? d : 1.0);
}

// Fixed generic spectral parameter used by the frozen reference values.
SpectralParameter mu_ref() { return {{0, 0.4}, {0, -0.1}, {0, -0.3}}; }

}  // namespace

TEST_CASE("voronoi kernel against frozen high-precision values") {
  // References computed with mpmath at 40 digits. At s = 1, mu = 0 the
  // kernel degenerates to -+ i / (2 pi^3).
  SpectralParameter mu0;
  REQUIRE(rel(voronoi_kernel({1, 0}, mu0, +1), {0.0, -0.01612576721659974459221103}) < 1e-12);
  REQUIRE(rel(voronoi_kernel({1, 0}, mu0, -1), {0.0, +0.01612576721659974459221103}) < 1e-12);
  SpectralParameter mu = mu_ref();
  REQUIRE(rel(voronoi_kernel({0, 0.7}, mu, +1),
              {-15.13738624871003553263437, -1.284920131766463294068664}) < 1e-12);
  REQUIRE(rel(voronoi_kernel({0, 0.7}, mu, -1),
              {-34.08816618477691314758179, -2.893535929266071817643524}) < 1e-12);
}

TEST_CASE("voronoi kernel conjugation symmetry") {
  // For s on the imaginary axis and mu a sign-flipped conjugate-closed
  // triple, conj(G^{+}(s)) relates to G^{-} at the reflected argument:
  // conj(G^{eps}(s; mu)) = G^{-eps}(conj(s); conj(mu)) follows from
  // conjugating every factor; check it numerically.
  SpectralParameter mu = mu_ref();
  SpectralParameter mu_conj{std::conj(mu.mu1), std::conj(mu.mu2), std::conj(mu.mu3)};
  CounterRng rng(31);
  for (int i = 0; i < 20; ++i) {
    C s(rng.next_uniform(-0.4, 0.9), rng.next_uniform(-1.5, 1.5));
    for (int sign : {+1, -1}) {
      C a = std::conj(voronoi_kernel(s, mu, sign));
      C b = voronoi_kernel(std::conj(s), mu_conj, -sign);
      REQUIRE(rel(a, b) < 1e-11);
    }
  }
}

TEST_CASE("gtilde against frozen high-precision values") {
  SpectralParameter mu = mu_ref();
  REQUIRE(rel(gtilde({0, 0.3}, mu, +1),
              {-8.758534996127232447533089e-5, 4.851778419357560346228782e-5}) < 1e-12);
  REQUIRE(rel(gtilde({0, 0.3}, mu, -1),
              {-9.954074958929683115846572e-5, 5.514046138053584227834292e-5}) < 1e-12);
  REQUIRE(rel(gtilde({0.1, 2}, mu, +1),
              {-1.888625503524199131225344e-6, -1.008293683164469606924983e-6}) < 1e-12);
}

TEST_CASE("gtilde vertical-line decay matches the |t|^{3 sigma - 3/2} law") {
  // Fit C in |Gt(sigma + it)| = C |t|^{3 sigma - 3/2} at increasing heights;
  // the fitted C must stay bounded and settle (monotone trend tolerated to
  // a few percent) as |t| grows through [10, 100].
  SpectralParameter mu = mu_ref();
  const double sigma = 0.1;
  const double expo = 3.0 * sigma - 1.5;
  double prev_c = 0.0;
  for (double t : {10.0, 20.0, 40.0, 80.0, 100.0}) {
    double mag = std::abs(gtilde({sigma, t}, mu, +1));
    double fitted = mag / std::pow(t, expo);
    if (prev_c != 0.0) REQUIRE(fitted < prev_c * 1.10);
    prev_c = fitted;
  }
  REQUIRE(prev_c > 0.0);
  REQUIRE(prev_c < 1.0);
}

TEST_CASE("gsym against frozen value and the independent re-implementation") {
  SpectralParameter mup{{0, 0.7}, {0, -0.2}, {0, -0.5}};
  REQUIRE(rel(gsym({0, 0.3}, {0, 0.3}, mup, +1, +1),
              {-0.04349839113913771902954574, -0.01963291437934016241785301}) < 1e-11);
  CounterRng rng(77);
  for (int i = 0; i < 40; ++i) {
    SpectralParameter mu{{0, rng.next_uniform(-1, 1)}, {0, rng.next_uniform(-1, 1)}, {0, 0}};
    mu.mu3 = -(mu.mu1 + mu.mu2);
    C s1(0.0, rng.next_uniform(-1.5, 1.5));
    C s2(0.0, rng.next_uniform(-1.5, 1.5));
    int e1 = rng.next_below(2) ? 1 : -1;
    int e2 = rng.next_below(2) ? 1 : -1;
    C a = gsym(s1, s2, mu, e1, e2);
    C b = gsym_alt(s1, s2, mu, e1, e2);
    REQUIRE(rel(a, b) < 1e-10);
  }
}

TEST_CASE("kernel identity: vrv kernel equals the prefactored gsym") {
  // Spot values on and off the imaginary axis; full 200-sample sweep lives
  // in the acceptance gate.
  struct Case {
    C s1, s2;
    SpectralParameter mu;
    int e1, e2;
  };
  const Case cases[] = {
      {{0, 0.4}, {0, -0.9}, {{0, 0.3}, {0, 0.5}, {0, -0.8}}, 1, -1},
      {{0, 0.25}, {0, 0.25}, {{0, 0}, {0, 0}, {0, 0}}, 1, 1},
      {{0.05, 0.6}, {-0.05, -0.3}, {{0, 0.2}, {0, -0.9}, {0, 0.7}}, -1, 1},
      {{0, 1.3}, {0, 0.2}, {{0, 0.1}, {0, 0.15}, {0, -0.25}}, -1, -1},
  };
  for (const Case& c : cases) {
    CAPTURE(c.s1, c.s2, c.e1, c.e2);
    REQUIRE(kernel_identity_residual(c.s1, c.s2, c.mu, c.e1, c.e2) < 1e-10);
  }
}

TEST_CASE("gamma reflection identities") {
  CounterRng rng(13);
  for (int i = 0; i < 50; ++i) {
    C z(rng.next_uniform(0.05, 2.0), rng.next_uniform(-3.0, 3.0));
    CAPTURE(z);
    REQUIRE(gamma_reflection_residual(z) < 1e-11);
  }
}

TEST_CASE("spectral measure values, zeros, and poles") {
  // Frozen generic value (mpmath, 20 digits):
  SpectralParameter mu = mu_ref();
  REQUIRE(rel(spec_measure(mu), {-0.011176928158330618655, 0.0}) < 1e-12);

  // All differences even integers -> every factor carries tan(pi k) = 0.
  SpectralParameter even{{2, 0}, {0, 0}, {-2, 0}};
  REQUIRE(std::abs(spec_measure(even)) < 1e-10);
  SpectralParameter even_shift{{2, 0.3}, {0, 0.3}, {-2, -0.6}};
  REQUIRE(std::abs(spec_measure(even_shift)) < 1e-10);

  // mu1 + mu2 + mu3 = 0 with an odd-integer difference: simple pole,
  // refused. (1, -1, 0) also touches the zero set through its even
  // difference, but its two odd differences dominate: analytically the
  // point is a net simple pole, so the pole check correctly fires first.
  REQUIRE_THROWS_AS(spec_measure({{0.5, 0}, {-0.5, 0}, {0, 0}}), std::domain_error);
  REQUIRE_THROWS_AS(spec_measure({{1, 0}, {-1, 0}, {0, 0}}), std::domain_error);

  // Zero input: all factors vanish.
  REQUIRE(std::abs(spec_measure({{0, 0}, {0, 0}, {0, 0}})) == 0.0);
}

TEST_CASE("test function: normalization, forced zeros, degenerate parameter") {
  TestFunctionConfig cfg;
  cfg.mu0 = {{0, 0.8}, {0, 0.3}, {0, -1.1}};
  cfg.Z = 60.0;
  cfg.A = 2;
  // h_Z(mu0) = 1 up to cross terms exp(N(mu0 - w mu0) Z) ~ e^{-30}.
  REQUIRE(std::abs(test_function_hz(cfg.mu0, cfg) - C(1.0, 0.0)) < 1e-10);

  // Forced zero: mu1 - mu2 = 3 = 2*1 + 1 with |n| <= A.
  SpectralParameter on_zero{{3.0, 0.5}, {0.0, 0.5}, {-3.0, -1.0}};
  REQUIRE(std::abs(test_function_hz(on_zero, cfg)) < 1e-12);
  // Every odd difference 2n+1, |n| <= A, is a zero; check the full set
  // {-3, -1, 1, 3, 5} for A = 2 via mu = mu0 + (d, 0, -d) shifts.
  for (double d : {-3.0, -1.0, 1.0, 3.0, 5.0}) {
    SpectralParameter z{{d, 0.8}, {0, 0.8}, {-d, -1.6}};
    REQUIRE(std::abs(test_function_hz(z, cfg)) < 1e-10);
  }

  // Degenerate mu0 (stabilizer of order 2): normalization still gives 1.
  TestFunctionConfig dg;
  dg.mu0 = {{0, 0.4}, {0, 0.4}, {0, -0.8}};
  dg.Z = 60.0;
  dg.A = 2;
  REQUIRE(std::abs(test_function_hz(dg.mu0, dg) - C(1.0, 0.0)) < 1e-10);

  // mu0 on the zero set of its own localizer polynomial is refused.
  TestFunctionConfig bad;
  bad.mu0 = {{3.0, 0}, {0.0, 0}, {-3.0, 0}};
  REQUIRE_THROWS_AS(test_function_hz(bad.mu0, bad), std::domain_error);
}

TEST_CASE("kw4 contour integral: contour independence and step control") {
  SpectralParameter mu = mu_ref();
  // Pinned contours; the step obeys step <= sigma / 4 (see header notes).
  ContourSpec a{0.05, 2000.0, 0.0125};
  ContourSpec b{0.12, 2000.0, 0.03};
  Kw4Result ra = kw4_eval(1.0, mu, a);
  Kw4Result rb = kw4_eval(1.0, mu, b);
  REQUIRE(std::abs(ra.value - rb.value) < 1e-6);
  // Measured agreement is ~5e-12; keep a tight regression band too.
  REQUIRE(std::abs(ra.value - rb.value) < 1e-9);

  // Frozen regression value (two independent contours agreed to 5e-12):
  REQUIRE(std::abs(rb.value - C(1.180007251544847e-8, -3.065322964497693e-7)) < 1e-9);

  // Negative-argument branch uses the minus kernel.
  Kw4Result na = kw4_eval(-1.0, mu, a);
  Kw4Result nb = kw4_eval(-1.0, mu, b);
  REQUIRE(std::abs(na.value - nb.value) < 1e-6);
  REQUIRE(std::abs(nb.value - C(1.170839436350e-8, 3.065455855995e-7)) < 1e-9);

  // Step halving moves the value by less than 1e-7.
  ContourSpec half = b;
  half.step = b.step / 2.0;
  Kw4Result s1 = kw4_eval(2.5, mu, b);
  Kw4Result s2 = kw4_eval(2.5, mu, half);
  REQUIRE(std::abs(s1.value - s2.value) < 1e-7);

  // Refinement driver stabilizes to the same value.
  Kw4Result rr = kw4_eval_refined(1.0, mu, ContourSpec{0.1, 500.0, 0.025}, 1e-8);
  REQUIRE(std::abs(rr.value - rb.value) < 1e-7);

  // Parameter validation.
  REQUIRE_THROWS_AS(kw4_eval(0.0, mu, b), std::domain_error);
  REQUIRE_THROWS_AS(kw4_eval(1.0, mu, ContourSpec{0.3, 100.0, 0.02}), std::domain_error);
  REQUIRE_THROWS_AS(kw4_eval(1.0, mu, ContourSpec{0.1, -5.0, 0.02}), std::domain_error);
  // Truncation estimate above an explicitly requested bound is refused.
  REQUIRE_THROWS_AS(kw4_eval(1.0, mu, ContourSpec{0.1, 50.0, 0.025}, 1e-12),
                    std::domain_error);
}

TEST_CASE("spectral parameter invariant") {
  REQUIRE(mu_ref().satisfies_invariants());
  SpectralParameter bad{{0, 0.4}, {0, 0.4}, {0, 0.4}};
  REQUIRE(!bad.satisfies_invariants());
  REQUIRE(bad.negated().mu1 == C(0, -0.4));
}

TEST_CASE("sign arguments are validated") {
  SpectralParameter mu = mu_ref();
  REQUIRE_THROWS_AS(voronoi_kernel({0, 0.5}, mu, 0), std::domain_error);
  REQUIRE_THROWS_AS(gtilde({0, 0.5}, mu, 2), std::domain_error);
  REQUIRE_THROWS_AS(gsym({0, 0.5}, {0, 0.5}, mu, 0, 1), std::domain_error);
}
