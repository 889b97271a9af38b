#pragma once

// Verification suites: named, seeded, reproducible batteries of checks over
// the numerical modules, each producing a VerificationReport (report.hpp).
//
// Design rules shared by every suite:
//
//   * Case plans are pure functions of (seed, config). Randomized suites
//     draw each case from its own counter-RNG sub-stream, split off by case
//     index, so any single case can be reproduced without running the rest.
//   * Every case logs an input digest containing the exact values handed to
//     the module under test (doubles printed with %.17g round-trip
//     precision), so the recorded residual can be reproduced by calling the
//     underlying operation directly with the logged inputs.
//   * A case body that throws is recorded as a failing case: the reason is
//     appended to the digest and the residual is set to the 9e99 sentinel.
//   * Tolerances and enumeration caps are named and recorded in the report
//     config; overrides with names a suite does not define are rejected
//     (std::invalid_argument), which the CLI maps to a usage error.
//   * Fixed-plan suites (kloosterman-kn, weil, kw4-contour, lp-paper) ignore
//     the sample-count option; their case lists are determined by caps alone
//     and their recorded "samples" is 0.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gl3verify/euler.hpp"
#include "gl3verify/expsums.hpp"
#include "gl3verify/kernels.hpp"
#include "gl3verify/paper_programs.hpp"
#include "gl3verify/plp.hpp"
#include "gl3verify/plp_parser.hpp"
#include "gl3verify/report.hpp"
#include "gl3verify/rng.hpp"
#include "gl3verify/satake.hpp"

namespace gl3verify {

inline constexpr std::uint64_t kDefaultSeed = 20260816ULL;

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::int64_t> samples;       // randomized suites only
  std::map<std::string, double> tol;         // overrides by name
  std::map<std::string, std::int64_t> cap;   // overrides by name
  std::string programs_dir;                  // lp-paper: external .lp files
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hecke",           "rankin-local",     "kloosterman-kn", "weil",
      "kernel-identity", "gamma-identities", "spec-measure",   "test-function",
      "kw4-contour",     "lp-paper",         "euler-paper"};
  return names;
}

namespace suite_detail {

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
inline std::string fmt(T x) {
  return std::to_string(x);
}

inline std::string fmt(Complex z) {
  return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")";
}

// Resolves defaults + overrides into the effective per-suite plan and
// records it in the report config. Unknown override names are rejected so a
// mistyped --tol/--cap cannot silently verify nothing.
inline void resolve_config(const SuiteConfig& cfg, VerificationReport& rep,
                           std::int64_t default_samples, bool sample_driven,
                           std::map<std::string, double> default_tol,
                           std::map<std::string, std::int64_t> default_cap) {
  rep.config.samples = default_samples;
  if (sample_driven && cfg.samples) {
    if (*cfg.samples < 0)
      throw std::invalid_argument("suite " + cfg.suite +
                                  ": sample count must be >= 0");
    rep.config.samples = *cfg.samples;
  }
  rep.config.tol = std::move(default_tol);
  rep.config.cap = std::move(default_cap);
  for (const auto& [name, value] : cfg.tol) {
    auto it = rep.config.tol.find(name);
    if (it == rep.config.tol.end())
      throw std::invalid_argument("suite " + cfg.suite +
                                  ": unknown tolerance name '" + name + "'");
    it->second = value;
  }
  for (const auto& [name, value] : cfg.cap) {
    auto it = rep.config.cap.find(name);
    if (it == rep.config.cap.end())
      throw std::invalid_argument("suite " + cfg.suite +
                                  ": unknown cap name '" + name + "'");
    it->second = value;
  }
}

// Runs one case body, turning any exception into an honest failure with the
// sentinel residual and the reason appended to the input digest. The body
// receives the digest string by reference and fills it before invoking
// throwing operations, so failed cases still log their inputs.
template <typename Body>
inline void run_case(VerificationReport& rep, std::int64_t index,
                     double tolerance, Body&& body) {
  CaseResult c;
  c.index = index;
  c.tolerance = tolerance;
  try {
    c.residual = body(c.input);
  } catch (const std::exception& e) {
    c.input += std::string(" error: ") + e.what();
    c.residual = kErrorResidualSentinel;
  }
  c.pass = c.residual <= c.tolerance;
  rep.max_residual = std::max(rep.max_residual, c.residual);
  rep.pass = rep.pass && c.pass;
  rep.cases.push_back(std::move(c));
}

// --- shared samplers ------------------------------------------------------

// Unit-product Satake triple from two rotation angles.
inline SatakeTriple unitary_triple(double t1, double t2) {
  SatakeTriple t;
  t.alpha = std::polar(1.0, t1);
  t.beta = std::polar(1.0, t2);
  t.gamma = std::polar(1.0, -(t1 + t2));
  return t;
}

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline std::pair<double, double> random_angles(CounterRng& rng) {
  double a = rng.next_uniform(0.0, kTwoPi);
  double b = rng.next_uniform(0.0, kTwoPi);
  return {a, b};
}

// One Satake triple per small prime plus a fallback, fourteen angles total,
// all logged so the assignment can be rebuilt from the digest alone.
struct LoggedAssignment {
  ParamAssignment assignment;
  std::string digest;
};

inline LoggedAssignment random_assignment(CounterRng& rng) {
  LoggedAssignment out;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    auto [a, b] = random_angles(rng);
    out.assignment.primes[p] = unitary_triple(a, b);
    out.digest += (out.digest.empty() ? "" : " ") + std::to_string(p) + ":(" +
                  fmt(a) + "," + fmt(b) + ")";
  }
  auto [a, b] = random_angles(rng);
  out.assignment.fallback = unitary_triple(a, b);
  out.digest += " *:(" + fmt(a) + "," + fmt(b) + ")";
  return out;
}

// Purely imaginary spectral parameter mu = i(a1, a2, -a1-a2).
inline SpectralParameter random_spectral(CounterRng& rng, double extent,
                                         double& a1, double& a2) {
  a1 = rng.next_uniform(-extent, extent);
  a2 = rng.next_uniform(-extent, extent);
  return {{0.0, a1}, {0.0, a2}, {0.0, -a1 - a2}};
}

// Imaginary ordinate at least `margin` away from every +-Im(mu_j): the
// gamma factors of the kernel identity have their poles there. Bounded
// rejection sampling; exhaustion (margin too large for the window) throws
// and is reported as a case failure.
inline double sample_away_from_poles(CounterRng& rng,
                                     const SpectralParameter& mu,
                                     double margin) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    double t = rng.next_uniform(-2.0, 2.0);
    double dist = std::numeric_limits<double>::infinity();
    for (Complex m : mu.as_array()) {
      dist = std::min(dist, std::abs(t - m.imag()));
      dist = std::min(dist, std::abs(t + m.imag()));
    }
    if (dist >= margin) return t;
  }
  throw std::runtime_error(
      "kernel-identity: cannot sample an ordinate away from the poles; "
      "margin too large for the sampling window");
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// --- suite implementations ------------------------------------------------

// hecke: for each sampled Satake assignment, exhaustively checks the Hecke
// multiplication rules, Hermitian symmetry, both Mobius inversions, and the
// composite-index recursions over all index triples with n*m1*m2 <= cap.
inline void run_hecke(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 10, true, {{"residual", 1e-10}}, {{"product", 1000}});
  const std::int64_t product = rep.config.cap.at("product");
  const double tol = rep.config.tol.at("residual");
  for (std::int64_t i = 0; i < rep.config.samples; ++i) {
    run_case(rep, i, tol, [&](std::string& input) {
      CounterRng rng = CounterRng(cfg.seed).split(static_cast<std::uint64_t>(i));
      LoggedAssignment la = random_assignment(rng);
      input = "assignment{" + la.digest + "} product<=" + fmt(product);
      double worst = 0.0;
      // The Mobius identities do not involve n, so sweep the (m1, m2) pairs
      // once instead of re-checking them inside the triple loop.
      for (std::int64_t m1 = 1; m1 <= product; ++m1)
        for (std::int64_t m2 = 1; m1 * m2 <= product; ++m2)
          worst = std::max(worst, check_mobius_identities(la.assignment, m1, m2));
      for (std::int64_t n = 1; n <= product; ++n)
        for (std::int64_t m1 = 1; n * m1 <= product; ++m1)
          for (std::int64_t m2 = 1; n * m1 * m2 <= product; ++m2) {
            worst = std::max(worst, check_hecke_relations(la.assignment, n, m1, m2));
            worst = std::max(worst, check_lemma_hecke(la.assignment, n, m1, m2));
          }
      return worst;
    });
  }
}

// rankin-local: degree-9 local Rankin-Selberg factorization, one random
// unit-product triple per case, series compared through x^order.
inline void run_rankin_local(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 100, true, {{"residual", 1e-9}}, {{"order", 8}});
  const int order = static_cast<int>(rep.config.cap.at("order"));
  const double tol = rep.config.tol.at("residual");
  for (std::int64_t i = 0; i < rep.config.samples; ++i) {
    run_case(rep, i, tol, [&](std::string& input) {
      CounterRng rng = CounterRng(cfg.seed).split(static_cast<std::uint64_t>(i));
      auto [a, b] = random_angles(rng);
      input = "angles=(" + fmt(a) + "," + fmt(b) + ") order=" + fmt(order);
      return rankin_residual(unitary_triple(a, b), order);
    });
  }
}

// kloosterman-kn: the divisor-weighted Kloosterman factorization of the
// long-element sum, exhaustive over moduli D1*D2 <= cap and all Fourier
// indices in {0..index}^4. Scale-aware tolerance: the sums grow with the
// modulus, so each case allows tol("scaled") * D1 * D2.
inline void run_kloosterman_kn(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 0, false, {{"scaled", 1e-7}},
                 {{"product", 36}, {"index", 2}});
  const std::int64_t product = rep.config.cap.at("product");
  const std::int64_t index_hi = rep.config.cap.at("index");
  const double scaled = rep.config.tol.at("scaled");
  std::int64_t idx = 0;
  for (std::int64_t D1 = 1; D1 <= product; ++D1)
    for (std::int64_t D2 = 1; D1 * D2 <= product; ++D2) {
      run_case(rep, idx, scaled * static_cast<double>(D1 * D2),
               [&](std::string& input) {
                 input = "D1=" + fmt(D1) + " D2=" + fmt(D2) + " indices=0.." +
                         fmt(index_hi);
                 double worst = 0.0;
                 for (std::int64_t n1 = 0; n1 <= index_hi; ++n1)
                   for (std::int64_t n2 = 0; n2 <= index_hi; ++n2)
                     for (std::int64_t m1 = 0; m1 <= index_hi; ++m1)
                       for (std::int64_t m2 = 0; m2 <= index_hi; ++m2)
                         worst = std::max(worst,
                                          kn_residual(n1, m2, m1, n2, D1, D2));
                 return worst;
               });
      ++idx;
    }
}

// weil: worst defect of the Weil bound |S(n, m; p)| <= 2 sqrt(p) over all
// nonzero residue pairs, one case per prime up to the cap.
inline void run_weil(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 0, false, {{"defect", 1e-9}}, {{"prime", 101}});
  const double tol = rep.config.tol.at("defect");
  std::int64_t idx = 0;
  for (std::int64_t p : primes_up_to(rep.config.cap.at("prime"))) {
    run_case(rep, idx, tol, [&](std::string& input) {
      input = "p=" + fmt(p);
      return weil_defect(p);
    });
    ++idx;
  }
}

// kernel-identity: relative defect of the closed form expressing the
// Gamma(1-s1-s2)-weighted Voronoi-kernel combination through the symmetric
// four-term kernel, maximized over all four sign pairs. The first `samples`
// cases sit on the imaginary axis; one tenth as many again are sampled at
// Re s = +-0.05, where the gamma arguments leave the axis and the identity
// is numerically harder (looser tolerance).
inline void run_kernel_identity(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 200, true,
                 {{"onaxis", 1e-8}, {"offaxis", 1e-7}, {"margin", 0.1}}, {});
  const double margin = rep.config.tol.at("margin");
  const std::int64_t on_count = rep.config.samples;
  const std::int64_t off_count = on_count / 10;
  for (std::int64_t i = 0; i < on_count + off_count; ++i) {
    const bool off_axis = i >= on_count;
    const double tol =
        rep.config.tol.at(off_axis ? "offaxis" : "onaxis");
    run_case(rep, i, tol, [&](std::string& input) {
      CounterRng rng = CounterRng(cfg.seed).split(static_cast<std::uint64_t>(i));
      double a1 = 0.0, a2 = 0.0;
      SpectralParameter mu = random_spectral(rng, 1.0, a1, a2);
      double re1 = 0.0, re2 = 0.0;
      if (off_axis) {
        re1 = rng.next_below(2) ? 0.05 : -0.05;
        re2 = rng.next_below(2) ? 0.05 : -0.05;
      }
      Complex s1(re1, sample_away_from_poles(rng, mu, margin));
      Complex s2(re2, sample_away_from_poles(rng, mu, margin));
      input = "s1=" + fmt(s1) + " s2=" + fmt(s2) + " mu=i(" + fmt(a1) + "," +
              fmt(a2) + "," + fmt(-a1 - a2) + ") eps=all";
      double worst = 0.0;
      for (int e1 : {1, -1})
        for (int e2 : {1, -1})
          worst = std::max(worst,
                           kernel_identity_residual(s1, s2, mu, e1, e2));
      return worst;
    });
  }
}

// gamma-identities: reflection/duplication identities for the gamma factor
// combinations used in the kernel-identity proof, sampled on a strip right
// of the poles.
inline void run_gamma_identities(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 50, true, {{"residual", 1e-10}}, {});
  const double tol = rep.config.tol.at("residual");
  for (std::int64_t i = 0; i < rep.config.samples; ++i) {
    run_case(rep, i, tol, [&](std::string& input) {
      CounterRng rng = CounterRng(cfg.seed).split(static_cast<std::uint64_t>(i));
      Complex z(rng.next_uniform(0.05, 2.0), rng.next_uniform(-3.0, 3.0));
      input = "z=" + fmt(z);
      return gamma_reflection_residual(z);
    });
  }
}

// spec-measure: per case, three structural checks of the spectral measure
// factor, combined into one residual:
//   (a) invariance under all six coordinate permutations (the factor is a
//       product of even functions of the pairwise differences),
//   (b) forced zero when a difference is a nonzero even integer,
//   (c) refusal (domain error) when a difference is an odd integer (pole);
//       a non-throwing evaluation there is recorded as a failure.
inline void run_spec_measure(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 50, true, {{"residual", 1e-10}}, {});
  const double tol = rep.config.tol.at("residual");
  for (std::int64_t i = 0; i < rep.config.samples; ++i) {
    run_case(rep, i, tol, [&](std::string& input) {
      CounterRng rng = CounterRng(cfg.seed).split(static_cast<std::uint64_t>(i));
      double a1 = 0.0, a2 = 0.0;
      SpectralParameter mu = random_spectral(rng, 1.0, a1, a2);
      std::int64_t k = rng.next_range(1, 2);
      double x = rng.next_uniform(-1.0, 1.0);
      input = "mu=i(" + fmt(a1) + "," + fmt(a2) + "," + fmt(-a1 - a2) +
              ") even_k=" + fmt(k) + " shift=" + fmt(x);
      double worst = 0.0;

      Complex base = spec_measure(mu);
      const std::array<Complex, 3> m = mu.as_array();
      static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (const auto& p : perms) {
        SpectralParameter pm{m[static_cast<std::size_t>(p[0])],
                             m[static_cast<std::size_t>(p[1])],
                             m[static_cast<std::size_t>(p[2])]};
        worst = std::max(worst, std::abs(spec_measure(pm) - base));
      }

      SpectralParameter even{{static_cast<double>(2 * k), x},
                             {0.0, x},
                             {static_cast<double>(-2 * k), -2.0 * x}};
      worst = std::max(worst, std::abs(spec_measure(even)));

      double half = static_cast<double>(2 * k - 1) / 2.0;
      SpectralParameter odd{{half, x}, {-half, x}, {0.0, -2.0 * x}};
      try {
        spec_measure(odd);
        input += " pole-not-refused";
        worst = kErrorResidualSentinel;
      } catch (const std::domain_error&) {
        // expected: odd-integer difference is a pole and must be refused
      }
      return worst;
    });
  }
}

// test-function: normalization h_Z(mu0) = 1 and the forced zero set
// mu_i - mu_j in odd integers (|2n+1| <= 2A+1), sampled over the zero sheet
// mu = (d + ix, ix, -d - 2ix).
inline void run_test_function(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 50, true, {{"residual", 1e-10}}, {});
  const double tol = rep.config.tol.at("residual");
  TestFunctionConfig tf;
  tf.mu0 = {{0.0, 0.8}, {0.0, 0.3}, {0.0, -1.1}};
  tf.Z = 60.0;
  tf.A = 2;
  for (std::int64_t i = 0; i < rep.config.samples; ++i) {
    run_case(rep, i, tol, [&](std::string& input) {
      CounterRng rng = CounterRng(cfg.seed).split(static_cast<std::uint64_t>(i));
      std::int64_t n = rng.next_range(-tf.A, tf.A);
      double d = static_cast<double>(2 * n + 1);
      double x = rng.next_uniform(0.2, 1.5);
      input = "mu0=i(0.8,0.3,-1.1) Z=60 A=2 zero_d=" + fmt(d) +
              " zero_x=" + fmt(x);
      double worst = std::abs(test_function_hz(tf.mu0, tf) - Complex(1.0, 0.0));
      SpectralParameter zero{{d, x}, {0.0, x}, {-d, -2.0 * x}};
      worst = std::max(worst, std::abs(test_function_hz(zero, tf)));
      return worst;
    });
  }
}

// kw4-contour: the Mellin inversion defining the long-element kernel must
// not depend on the contour. Two pinned contours with different abscissas,
// heights matched, steps respecting the step <= sigma/4 aliasing rule.
inline void run_kw4_contour(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 0, false, {{"residual", 1e-6}}, {});
  const double tol = rep.config.tol.at("residual");
  const SpectralParameter mu{{0.0, 0.4}, {0.0, -0.1}, {0.0, -0.3}};
  const ContourSpec ca{0.05, 2000.0, 0.0125};
  const ContourSpec cb{0.12, 2000.0, 0.03};
  const double ys[] = {1.0, -1.0};
  for (std::int64_t i = 0; i < 2; ++i) {
    run_case(rep, i, tol, [&](std::string& input) {
      double y = ys[i];
      input = "y=" + fmt(y) + " mu=i(0.4,-0.1,-0.3)" +
              " contourA=(0.05,2000,0.0125) contourB=(0.12,2000,0.03)";
      Kw4Result ra = kw4_eval(y, mu, ca);
      Kw4Result rb = kw4_eval(y, mu, cb);
      return std::abs(ra.value - rb.value);
    });
  }
}

// lp-paper: the bundled piecewise-linear programs must solve to their
// published exact optima (zero tolerance; the optimum, the solver argmax,
// and the published witness are all checked in exact rational arithmetic).
// With --programs DIR the suite instead solves every .lp file in DIR and
// requires each to reach a finite optimum.
inline void run_lp_paper(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 0, false, {}, {});
  if (cfg.programs_dir.empty()) {
    std::int64_t idx = 0;
    for (const NamedProgram& np : paper_programs()) {
      run_case(rep, idx, 0.0, [&](std::string& input) {
        input = "program=" + np.name;
        const PLProgram prog = parse_program(np.text);
        const PLSolution sol = solve(prog);
        if (sol.status != SolveStatus::kOptimal)
          throw std::runtime_error("program did not reach a finite optimum");
        const PointCheck witness = evaluate_point(prog, np.witness);
        if (sol.value != np.optimum)
          throw std::runtime_error("optimum differs from the published value");
        if (!witness.feasible)
          throw std::runtime_error("published witness is infeasible");
        if (witness.objective != np.optimum)
          throw std::runtime_error("published witness does not attain the optimum");
        input += " optimum=exact witness=attains branches=" +
                 fmt(sol.branches_enumerated);
        return 0.0;  // all comparisons above are exact rational equality
      });
      ++idx;
    }
    return;
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(cfg.programs_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".lp")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw std::invalid_argument("lp-paper: no .lp files in " + cfg.programs_dir);
  std::int64_t idx = 0;
  for (const auto& path : files) {
    run_case(rep, idx, 0.0, [&](std::string& input) {
      input = "file=" + path.filename().string();
      std::ifstream in(path, std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      const PLProgram prog = parse_program(text.str());
      const PLSolution sol = solve(prog);
      if (sol.status != SolveStatus::kOptimal)
        throw std::runtime_error("program did not reach a finite optimum");
      input += " branches=" + fmt(sol.branches_enumerated);
      return 0.0;
    });
    ++idx;
  }
}

// euler-paper: the 27-fold truncated local sum against the closed-form
// local factor, for every prime <= cap("prime"), twist exponent m <=
// cap("mexp"), the trivial Satake triple, and `samples` random unit-product
// triples per (p, m).
inline void run_euler_paper(const SuiteConfig& cfg, VerificationReport& rep) {
  resolve_config(cfg, rep, 20, true, {{"relative", 1e-9}},
                 {{"prime", 7}, {"mexp", 2}});
  const double tol = rep.config.tol.at("relative");
  const std::vector<std::int64_t> ps = primes_up_to(rep.config.cap.at("prime"));
  const std::int64_t mexp = rep.config.cap.at("mexp");
  std::int64_t idx = 0;
  for (std::int64_t p : ps)
    for (std::int64_t m = 0; m <= mexp; ++m)
      for (std::int64_t j = 0; j <= rep.config.samples; ++j) {
        run_case(rep, idx, tol, [&](std::string& input) {
          SatakeTriple t;
          if (j == 0) {
            input = "p=" + fmt(p) + " m=" + fmt(m) + " triple=trivial";
          } else {
            CounterRng rng =
                CounterRng(cfg.seed).split(static_cast<std::uint64_t>(idx));
            auto [a, b] = random_angles(rng);
            t = unitary_triple(a, b);
            input = "p=" + fmt(p) + " m=" + fmt(m) + " angles=(" + fmt(a) +
                    "," + fmt(b) + ")";
          }
          const SchurTable table(t);
          const Complex lhs = euler_factor(p, m, table);
          const Complex rhs = euler_closed_form(p, m, table);
          return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        });
        ++idx;
      }
}

}  // namespace suite_detail

inline VerificationReport run_suite(const SuiteConfig& cfg) {
  using namespace suite_detail;
  VerificationReport rep;
  rep.suite = cfg.suite;
  rep.seed = cfg.seed;
  if (cfg.suite == "hecke") run_hecke(cfg, rep);
  else if (cfg.suite == "rankin-local") run_rankin_local(cfg, rep);
  else if (cfg.suite == "kloosterman-kn") run_kloosterman_kn(cfg, rep);
  else if (cfg.suite == "weil") run_weil(cfg, rep);
  else if (cfg.suite == "kernel-identity") run_kernel_identity(cfg, rep);
  else if (cfg.suite == "gamma-identities") run_gamma_identities(cfg, rep);
  else if (cfg.suite == "spec-measure") run_spec_measure(cfg, rep);
  else if (cfg.suite == "test-function") run_test_function(cfg, rep);
  else if (cfg.suite == "kw4-contour") run_kw4_contour(cfg, rep);
  else if (cfg.suite == "lp-paper") run_lp_paper(cfg, rep);
  else if (cfg.suite == "euler-paper") run_euler_paper(cfg, rep);
  else
    throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  return rep;
}

}  // namespace gl3verify
