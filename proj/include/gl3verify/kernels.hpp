#pragma once

// Gamma-product kernels for the GL(3) spectral machinery:
//
//   * voronoi_kernel  - the +-pair of Mellin kernels from the GL(3) Voronoi
//                       summation formula,
//   * gtilde          - the half-shifted dual kernel (the Mellin transform
//                       of the Whittaker-expansion kernel K at the long Weyl
//                       element); decays like |t|^(3 sigma - 3/2) on
//                       vertical lines,
//   * gsym            - the symmetric four-term kernel mixing two Mellin
//                       variables with signs (eps1, eps2),
//   * vrv_kernel      - the two-term combination of voronoi kernels with a
//                       Gamma(1 - s1 - s2) factor and eighth-root phases,
//   * kernel_identity_residual
//                     - numerical defect of the closed-form identity
//                       expressing vrv_kernel through gsym,
//   * gamma reflection identities used in that identity's proof,
//   * spec_measure    - the Weyl-invariant spectral measure factor
//                       prod (mu_i - mu_j) tan(pi/2 (mu_i - mu_j)),
//   * test_function_hz - the localized Weyl-symmetrized test function h_Z
//                       with its forced zero set,
//   * kw4_eval        - numerical Mellin inversion of gtilde along a
//                       vertical contour, giving the position-space kernel
//                       at the long Weyl element.
//
// Conventions: e(x) = exp(2 pi i x) (also for complex x), complex powers
// are principal branch, and all gamma ratios at large height go through
// log-gamma differences (see cgamma.hpp) to dodge intermediate under- and
// overflow.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "gl3verify/cgamma.hpp"

namespace gl3verify {

using Complex = std::complex<double>;

namespace kernel_detail {
inline constexpr double kPi = 3.14159265358979323846264338328;

inline Complex e_of(Complex x) {
  return std::exp(Complex(0.0, 2.0 * kPi) * x);
}

// b^z for real b > 0.
inline Complex rpow(double b, Complex z) { return std::exp(z * std::log(b)); }
}  // namespace kernel_detail

// Langlands/Satake spectral parameter (mu1, mu2, mu3), mu1+mu2+mu3 = 0.
struct SpectralParameter {
  Complex mu1{0.0, 0.0};
  Complex mu2{0.0, 0.0};
  Complex mu3{0.0, 0.0};

  std::array<Complex, 3> as_array() const { return {mu1, mu2, mu3}; }

  SpectralParameter negated() const { return {-mu1, -mu2, -mu3}; }

  bool satisfies_invariants(double tol = 1e-12) const {
    return std::abs(mu1 + mu2 + mu3) <= tol;
  }
};

// Voronoi summation kernel
//   G^{+-}(s; mu) = 4 (2 pi)^{-3s} prod_j Gamma(s + mu_j)
//                   * ( prod_j cos(pi (s + mu_j)/2)
//                       -+-> +- (1/i) prod_j sin(pi (s + mu_j)/2) ).
// `sign` is +1 or -1. Throws (via cgamma) when s + mu_j sits on a pole.
inline Complex voronoi_kernel(Complex s, const SpectralParameter& mu, int sign) {
  using namespace kernel_detail;
  if (sign != 1 && sign != -1)
    throw std::domain_error("voronoi_kernel: sign must be +-1");
  Complex gp(1.0, 0.0), cp(1.0, 0.0), sp(1.0, 0.0);
  for (Complex m : mu.as_array()) {
    gp *= cgamma(s + m);
    cp *= std::cos(kPi * (s + m) / 2.0);
    sp *= std::sin(kPi * (s + m) / 2.0);
  }
  // (1/i) = -i.
  return 4.0 * rpow(2.0 * kPi, -3.0 * s) * gp *
         (cp + static_cast<double>(sign) * Complex(0.0, -1.0) * sp);
}

// Half-shifted dual kernel
//   Gt^{+-}(s; mu) = pi^{-3s} / (12288 pi^{7/2})
//       * ( prod_j Gamma((s - mu_j)/2) / Gamma((1 - s + mu_j)/2)
//           +- i prod_j Gamma((1 + s - mu_j)/2) / Gamma((2 - s + mu_j)/2) ).
// Evaluated through log-gamma differences so it stays finite on vertical
// lines of arbitrary height (needed by kw4_eval's contour integration).
inline Complex gtilde(Complex s, const SpectralParameter& mu, int sign) {
  using namespace kernel_detail;
  if (sign != 1 && sign != -1)
    throw std::domain_error("gtilde: sign must be +-1");
  Complex pref = rpow(kPi, -3.0 * s) / (12288.0 * std::pow(kPi, 3.5));
  Complex p1(1.0, 0.0), p2(1.0, 0.0);
  for (Complex m : mu.as_array()) {
    p1 *= cgamma_ratio(0.5 * (s - m), 0.5 * (1.0 - s + m));
    p2 *= cgamma_ratio(0.5 * (1.0 + s - m), 0.5 * (2.0 - s + m));
  }
  return pref * (p1 + static_cast<double>(sign) * Complex(0.0, 1.0) * p2);
}

// Symmetric four-term kernel
//   Gsym^{e1,e2}(s1, s2; mu) = (1024 pi^{5/2})^{-1}
//     sum_{d1, d2 in {0,1}, d3 = (d1+d2) mod 2} e1^{d1} e2^{d2} (-1)^{d1 d2}
//       * Gamma((1 + d3 - s1 - s2)/2) / Gamma((d3 + s1 + s2)/2)
//       * prod_j [ Gamma((d1 + s1 - mu_j)/2) Gamma((d2 + s2 + mu_j)/2) ]
//               / [ Gamma((1 + d1 - s1 + mu_j)/2) Gamma((1 + d2 - s2 - mu_j)/2) ].
inline Complex gsym(Complex s1, Complex s2, const SpectralParameter& mu,
                    int eps1, int eps2) {
  using namespace kernel_detail;
  if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
    throw std::domain_error("gsym: signs must be +-1");
  Complex total(0.0, 0.0);
  for (int d1 = 0; d1 <= 1; ++d1)
    for (int d2 = 0; d2 <= 1; ++d2) {
      int d3 = (d1 + d2) % 2;
      double sgn = (d1 ? eps1 : 1) * (d2 ? eps2 : 1) * ((d1 * d2) ? -1 : 1);
      Complex term = sgn * cgamma_ratio(0.5 * (1.0 + d3 - s1 - s2),
                                        0.5 * (Complex(d3, 0.0) + s1 + s2));
      for (Complex m : mu.as_array()) {
        term *= cgamma_ratio(0.5 * (Complex(d1, 0.0) + s1 - m),
                             0.5 * (Complex(1.0 + d1, 0.0) - s1 + m));
        term *= cgamma_ratio(0.5 * (Complex(d2, 0.0) + s2 + m),
                             0.5 * (Complex(1.0 + d2, 0.0) - s2 - m));
      }
      total += term;
    }
  return total / (1024.0 * std::pow(kPi, 2.5));
}

// Independent re-implementation of gsym through direct gamma products (no
// log-ratio path, separate numerator/denominator accumulation), kept as a
// cross-check oracle for the primary implementation.
inline Complex gsym_alt(Complex s1, Complex s2, const SpectralParameter& mu,
                        int eps1, int eps2) {
  using namespace kernel_detail;
  Complex total(0.0, 0.0);
  for (int d1 = 0; d1 <= 1; ++d1)
    for (int d2 = 0; d2 <= 1; ++d2) {
      int d3 = (d1 + d2) % 2;
      double sgn = (d1 ? eps1 : 1) * (d2 ? eps2 : 1) * ((d1 * d2) ? -1 : 1);
      Complex num = cgamma(0.5 * (1.0 + d3 - s1 - s2));
      Complex den = cgamma(0.5 * (Complex(d3, 0.0) + s1 + s2));
      for (Complex m : mu.as_array()) {
        num *= cgamma(0.5 * (Complex(d1, 0.0) + s1 - m)) *
               cgamma(0.5 * (Complex(d2, 0.0) + s2 + m));
        den *= cgamma(0.5 * (Complex(1.0 + d1, 0.0) - s1 + m)) *
               cgamma(0.5 * (Complex(1.0 + d2, 0.0) - s2 - m));
      }
      total += sgn * num / den;
    }
  return total / (1024.0 * std::pow(kPi, 2.5));
}

// Two-term Voronoi combination
//   G^{e1,e2}(s1, s2; mu0) = sum_{eta1 = +-1, eta2 = e1 e2 eta1}
//       Gamma(1 - s1 - s2) G^{eta1}(s1; mu0) G^{eta2}(s2; -mu0)
//       * e( e2 eta1 (s1 + s2 - 1) / 4 ).
inline Complex vrv_kernel(Complex s1, Complex s2, const SpectralParameter& mu0,
                          int eps1, int eps2) {
  using namespace kernel_detail;
  Complex total(0.0, 0.0);
  Complex gfac = cgamma(1.0 - s1 - s2);
  for (int eta1 : {1, -1}) {
    int eta2 = eps1 * eps2 * eta1;
    total += gfac * voronoi_kernel(s1, mu0, eta1) *
             voronoi_kernel(s2, mu0.negated(), eta2) *
             e_of(static_cast<double>(eps2 * eta1) * (s1 + s2 - 1.0) / 4.0);
  }
  return total;
}

// Relative defect of the closed-form identity
//   G^{e1,e2}(s1, s2; mu0)
//     = 512 pi^{3(2 - s1 - s2)} 2^{-s1-s2} Gsym^{-e2,-e1}(s1, s2; -mu0).
inline double kernel_identity_residual(Complex s1, Complex s2,
                                       const SpectralParameter& mu0, int eps1,
                                       int eps2) {
  using namespace kernel_detail;
  Complex lhs = vrv_kernel(s1, s2, mu0, eps1, eps2);
  Complex rhs = 512.0 * rpow(kPi, 3.0 * (2.0 - s1 - s2)) *
                rpow(2.0, -(s1 + s2)) *
                gsym(s1, s2, mu0.negated(), -eps2, -eps1);
  double denom = std::abs(lhs) + std::abs(rhs);
  if (denom == 0.0) return 0.0;
  return std::abs(lhs - rhs) / denom;
}

// Gamma reflection/duplication identities used in the proof of the kernel
// identity. Writing G2(w) := Gamma(w) Gamma(conj(w)) (equal to |Gamma(w)|^2
// for real-axis-symmetric uses), both hold for all z away from poles:
//
//   (a) Gamma(z + 1/2) / Gamma(conj(z))
//          = 2^{1-2z} sqrt(pi) Gamma(2z) / G2(z),
//   (b) Gamma(z) / Gamma(conj(z) + 1/2)
//          = 2^{1-2z} sqrt(pi) Gamma(2z) / G2(z + 1/2),
//
// and on the imaginary axis t in i R:
//
//   (c) G2(t)        = -pi / (t sin(pi t)),
//   (d) G2(1/2 + t)  =  pi / cos(pi t).
//
// Returns the largest relative defect of (a) and (b) at z, and of (c), (d)
// at t = i Im(z) (skipping (c) when Im(z) = 0).
inline double gamma_reflection_residual(Complex z) {
  using namespace kernel_detail;
  auto g2 = [](Complex w) { return cgamma(w) * cgamma(std::conj(w)); };
  auto reldiff = [](Complex a, Complex b) {
    double d = std::abs(a) + std::abs(b);
    return d == 0.0 ? 0.0 : std::abs(a - b) / d;
  };
  Complex zb = std::conj(z);
  Complex common = rpow(2.0, 1.0 - 2.0 * z) * std::sqrt(kPi) * cgamma(2.0 * z);
  double r = reldiff(cgamma(z + 0.5) / cgamma(zb), common / g2(z));
  r = std::max(r, reldiff(cgamma(z) / cgamma(zb + 0.5), common / g2(z + 0.5)));

  Complex t(0.0, z.imag());
  if (t.imag() != 0.0)
    r = std::max(r, reldiff(g2(t), -kPi / (t * std::sin(kPi * t))));
  r = std::max(r, reldiff(g2(0.5 + t), kPi / std::cos(kPi * t)));
  return r;
}

// Spectral measure factor
//   spec(mu) = prod_{(i,j) in {(1,2),(2,3),(3,1)}}
//                  (mu_i - mu_j) tan(pi/2 (mu_i - mu_j)).
// Zeros when some difference is a nonzero even integer; simple poles when
// some difference is an odd integer. Pole proximity (within 1e-9) raises
// a domain error before any evaluation, so inputs on the polar set --
// including those that also touch the zero set -- are always refused.
inline Complex spec_measure(const SpectralParameter& mu) {
  using namespace kernel_detail;
  const Complex diffs[3] = {mu.mu1 - mu.mu2, mu.mu2 - mu.mu3, mu.mu3 - mu.mu1};
  for (Complex d : diffs) {
    double re = d.real();
    double nearest_odd = 2.0 * std::floor(re / 2.0) + 1.0;  // odd integer nearest below/above
    double dist = std::min(std::abs(re - nearest_odd), std::abs(re - (nearest_odd + 2.0)));
    if (std::abs(d.imag()) <= 1e-9 && dist <= 1e-9)
      throw std::domain_error("spec_measure: mu_i - mu_j at an odd integer (pole)");
  }
  Complex out(1.0, 0.0);
  for (Complex d : diffs) out *= d * std::tan(kPi / 2.0 * d);
  return out;
}

// Localized Weyl-symmetrized test function
//
//   h_Z(mu) = (1/#Stab(mu0)) sum_{w in W} exp( N(mu - w(mu0)) Z )
//             * P(mu) / P(mu0),
//   N(z)    = z1^2 + z2^2 + z3^2,
//   P(mu)   = prod_{|n| <= A} prod_{i < j} (mu_i - mu_j - (2n + 1)),
//
// where W is the permutation group acting on the mu0 coordinates and
// #Stab(mu0) counts permutations fixing mu0 (coincidence detection at
// 1e-12), so h_Z(mu0) = 1 up to the exponentially small cross terms.
// P forces zeros at every mu with mu_i - mu_j an odd integer 2n+1, |n| <= A.
// Throws when P(mu0) = 0 (mu0 on its own zero set).
struct TestFunctionConfig {
  SpectralParameter mu0;
  double Z = 60.0;
  int A = 2;
};

namespace kernel_detail {
inline Complex hz_poly(const SpectralParameter& mu, int A) {
  std::array<Complex, 3> m = mu.as_array();
  Complex out(1.0, 0.0);
  for (int n = -A; n <= A; ++n) {
    double odd = 2.0 * n + 1.0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) out *= m[static_cast<std::size_t>(i)] - m[static_cast<std::size_t>(j)] - odd;
  }
  return out;
}
}  // namespace kernel_detail

inline Complex test_function_hz(const SpectralParameter& mu,
                                const TestFunctionConfig& cfg) {
  using namespace kernel_detail;
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::array<Complex, 3> base = cfg.mu0.as_array();
  Complex pmu0 = hz_poly(cfg.mu0, cfg.A);
  if (std::abs(pmu0) < 1e-250)
    throw std::domain_error("test_function_hz: P(mu0) = 0");
  Complex pmu = hz_poly(mu, cfg.A);
  // An exact zero of the localizer polynomial forces h_Z(mu) = 0 no matter
  // how large the Gaussian factors are; returning early also avoids
  // 0 * overflow = NaN when Re N(mu - w mu0) Z exceeds the double range.
  if (pmu == Complex(0.0, 0.0)) return {0.0, 0.0};
  Complex log_pratio = std::log(pmu / pmu0);

  int stabilizer = 0;
  std::array<Complex, 3> m = mu.as_array();
  Complex sum(0.0, 0.0);
  for (const auto& p : perms) {
    std::array<Complex, 3> w = {base[static_cast<std::size_t>(p[0])],
                                base[static_cast<std::size_t>(p[1])],
                                base[static_cast<std::size_t>(p[2])]};
    if (std::abs(w[0] - base[0]) <= 1e-12 && std::abs(w[1] - base[1]) <= 1e-12 &&
        std::abs(w[2] - base[2]) <= 1e-12)
      ++stabilizer;
    Complex n = (m[0] - w[0]) * (m[0] - w[0]) + (m[1] - w[1]) * (m[1] - w[1]) +
                (m[2] - w[2]) * (m[2] - w[2]);
    // Combine the Gaussian and the polynomial ratio in log scale so a tiny
    // ratio can cancel a huge Gaussian without intermediate overflow.
    sum += std::exp(n * cfg.Z + log_pratio);
  }
  return sum / static_cast<double>(stabilizer);
}

// Vertical-contour Mellin inversion of gtilde:
//
//   K(y; mu) = (1/2 pi i) int_{(sigma)} |y|^{-s} Gt^{sgn y}(s; mu) ds,
//
// 0 < sigma < 1/6, evaluated by the trapezoid rule on s = sigma + i t,
// t in [-height, height] with the given step.
//
// Step-size warning: viewed as a function of complex t, the integrand has
// poles at t = Im mu_j + i(2k + sigma), i.e. at distance sigma from the
// contour, so the trapezoid's aliasing error scales like e^{-2 pi sigma /
// step}. Resolving the induced Lorentzian spikes of width sigma near
// t = Im mu_j requires step <~ sigma / 4 (e.g. sigma = 0.05 needs step
// ~0.0125; step = 0.05 there converges confidently to a value that is
// wrong by ~1e-7). The default below scales the step accordingly.
//
// The returned truncation estimate bounds the discarded tails by
// |integrand(+-height)| * height / (1/2 - 3 sigma), the crude power-law
// estimate from |Gt(sigma + it)| ~ |t|^{3 sigma - 3/2}; phase oscillation
// typically makes the true remainder far smaller, which is why callers
// requiring a certified tolerance should compare two contours instead (see
// the doubling driver below).
struct ContourSpec {
  double sigma = 0.1;
  double height = 2000.0;
  double step = 0.025;  // <= sigma / 4 for the default sigma
};

struct Kw4Result {
  Complex value{0.0, 0.0};
  double truncation_estimate = 0.0;
};

inline Kw4Result kw4_eval(double y, const SpectralParameter& mu,
                          const ContourSpec& c,
                          double max_truncation = std::numeric_limits<double>::infinity()) {
  using namespace kernel_detail;
  if (y == 0.0) throw std::domain_error("kw4_eval: y must be nonzero");
  if (!(c.sigma > 0.0 && c.sigma < 1.0 / 6.0))
    throw std::domain_error("kw4_eval: sigma must lie in (0, 1/6)");
  if (!(c.height > 0.0) || !(c.step > 0.0) || c.step > c.height)
    throw std::domain_error("kw4_eval: bad contour extent");
  int sign = (y > 0.0) ? 1 : -1;
  double ay = std::abs(y);
  auto integrand = [&](double t) {
    Complex s(c.sigma, t);
    return rpow(ay, -s) * gtilde(s, mu, sign);
  };
  // Trapezoid over [-height, height]; ds = i dt cancels the i of
  // 1/(2 pi i), leaving (1/2 pi) int f dt.
  const long long nsteps = static_cast<long long>(std::floor(c.height / c.step));
  const double T = static_cast<double>(nsteps) * c.step;
  Complex acc = 0.5 * (integrand(-T) + integrand(T));
  for (long long k = -nsteps + 1; k < nsteps; ++k)
    acc += integrand(static_cast<double>(k) * c.step);
  Kw4Result out;
  out.value = acc * c.step / (2.0 * kPi);
  double edge = std::max(std::abs(integrand(T)), std::abs(integrand(-T)));
  out.truncation_estimate = edge * T / (0.5 - 3.0 * c.sigma) / kPi;
  if (out.truncation_estimate > max_truncation)
    throw std::domain_error("kw4_eval: estimated truncation error above requested tolerance");
  return out;
}

// Contour-refinement driver: doubles the height and halves the step until
// two successive evaluations agree within `target`, starting from `c0`.
// Returns the last evaluation; throws after `max_doublings` refinements
// without stabilization.
inline Kw4Result kw4_eval_refined(double y, const SpectralParameter& mu,
                                  ContourSpec c0, double target,
                                  int max_doublings = 5) {
  Kw4Result prev = kw4_eval(y, mu, c0);
  for (int i = 0; i < max_doublings; ++i) {
    ContourSpec c = c0;
    c.height = c0.height * 2.0;
    c.step = c0.step / 2.0;
    Kw4Result next = kw4_eval(y, mu, c);
    if (std::abs(next.value - prev.value) <= target) return next;
    c0 = c;
    prev = next;
  }
  throw std::domain_error("kw4_eval_refined: contour did not stabilize");
}

}  // namespace gl3verify
