// Acceptance gate: seven go/no-go criteria for the toolkit, each printed as
// one PASS/FAIL line. Exits 0 only when every criterion holds.
//
// The criteria pin their own tolerances, sample plans, and budgets in this
// file (and assert that the suite defaults match them), so a silent change
// to a suite default cannot weaken the gate.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gl3verify/paper_programs.hpp"
#include "gl3verify/plp.hpp"
#include "gl3verify/plp_parser.hpp"
#include "gl3verify/suites.hpp"

namespace {

using gl3verify::SuiteConfig;
using gl3verify::VerificationReport;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Gate {
  int total = 0;
  int passed = 0;

  void report(int number, const std::string& title, bool ok,
              const std::string& detail) {
    ++total;
    passed += ok ? 1 : 0;
    std::printf("[%d/7] %s: %s (%s)\n", number, title.c_str(),
                ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
  }
};

std::string fmt_resid(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", r);
  return buf;
}

// Runs a suite and folds structural expectations into one flag; mismatch
// reasons are appended to `why`.
VerificationReport run_checked(const SuiteConfig& cfg, std::size_t want_cases,
                               bool& ok, std::string& why) {
  VerificationReport rep;
  try {
    rep = gl3verify::run_suite(cfg);
  } catch (const std::exception& e) {
    ok = false;
    why += std::string(" suite error: ") + e.what() + ";";
    return rep;
  }
  if (rep.cases.size() != want_cases) {
    ok = false;
    why += " expected " + std::to_string(want_cases) + " cases, got " +
           std::to_string(rep.cases.size()) + ";";
  }
  if (!rep.pass) {
    ok = false;
    std::size_t shown = 0;
    for (const auto& c : rep.cases)
      if (!c.pass && shown++ < 3)
        why += " case " + std::to_string(c.index) + " residual " +
               fmt_resid(c.residual) + " > " + fmt_resid(c.tolerance) +
               " [" + c.input + "];";
  }
  return rep;
}

std::string fmt_secs(double s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// The pinned tolerance/cap must exist under exactly this name with exactly
// this value; a renamed or re-valued knob fails the criterion.
void require_tol(const VerificationReport& rep, const char* name, double want,
                 bool& ok, std::string& why) {
  auto it = rep.config.tol.find(name);
  if (it == rep.config.tol.end() || it->second != want) {
    ok = false;
    why += " " + rep.suite + ": tolerance '" + name + "' drifted;";
  }
}

void require_cap(const VerificationReport& rep, const char* name,
                 std::int64_t want, bool& ok, std::string& why) {
  auto it = rep.config.cap.find(name);
  if (it == rep.config.cap.end() || it->second != want) {
    ok = false;
    why += " " + rep.suite + ": cap '" + name + "' drifted;";
  }
}

}  // namespace

int main() {
  Gate gate;

  // ------------------------------------------------------------------
  // Criterion 1: the five bundled piecewise-linear programs solve to their
  // published exact optima with zero tolerance, each within 60 s, and the
  // published witnesses are feasible and attain the optima.
  {
    bool ok = true;
    std::string why;
    double worst_secs = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& np : gl3verify::paper_programs()) {
      const auto p0 = std::chrono::steady_clock::now();
      try {
        const auto prog = gl3verify::parse_program(np.text);
        const auto sol = gl3verify::solve(prog);
        if (sol.status != gl3verify::SolveStatus::kOptimal) {
          ok = false;
          why += " " + np.name + ": no finite optimum;";
        } else if (sol.value != np.optimum) {
          ok = false;
          why += " " + np.name + ": optimum mismatch;";
        }
        const auto wit = gl3verify::evaluate_point(prog, np.witness);
        if (!wit.feasible || wit.objective != np.optimum) {
          ok = false;
          why += " " + np.name + ": witness defect;";
        }
      } catch (const std::exception& e) {
        ok = false;
        why += " " + np.name + ": " + e.what() + ";";
      }
      const double secs = seconds_since(p0);
      worst_secs = std::max(worst_secs, secs);
      if (secs >= 60.0) {
        ok = false;
        why += " " + np.name + ": exceeded the 60 s budget;";
      }
    }
    gate.report(1, "bundled programs reach their published optima exactly",
                ok,
                "5 programs, zero tolerance, total " +
                    fmt_secs(seconds_since(t0)) + ", slowest " +
                    fmt_secs(worst_secs) + " < 60 s" + why);
  }

  // ------------------------------------------------------------------
  // Criterion 2: truncated local Euler sum vs closed form for p in
  // {2,3,5,7}, twist exponent m in {0,1,2}, the trivial triple plus 20
  // random unit-product triples per (p, m); relative tolerance 1e-9;
  // all 252 evaluations within 600 s.
  {
    bool ok = true;
    std::string why;
    SuiteConfig cfg;
    cfg.suite = "euler-paper";
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep = run_checked(cfg, 4 * 3 * 21, ok, why);
    const double secs = seconds_since(t0);
    require_tol(rep, "relative", 1e-9, ok, why);
    require_cap(rep, "prime", 7, ok, why);
    require_cap(rep, "mexp", 2, ok, why);
    if (secs >= 600.0) {
      ok = false;
      why += " exceeded the 600 s budget;";
    }
    gate.report(2, "local Euler factor matches its closed form", ok,
                "252 cases, rel tol 1e-9, max residual " +
                    fmt_resid(rep.max_residual) + ", " + fmt_secs(secs) +
                    " < 600 s" + why);
  }

  // ------------------------------------------------------------------
  // Criterion 3: kernel identity, 200 seeded imaginary-axis samples with
  // pole margin 0.1 at relative tolerance 1e-8, plus 20 samples at
  // Re s = +-0.05 at 1e-7, every sign pair checked.
  {
    bool ok = true;
    std::string why;
    SuiteConfig cfg;
    cfg.suite = "kernel-identity";
    VerificationReport rep = run_checked(cfg, 220, ok, why);
    for (std::size_t i = 0; i < rep.cases.size(); ++i) {
      const double want = i < 200 ? 1e-8 : 1e-7;
      if (rep.cases[i].tolerance != want) {
        ok = false;
        why += " case " + std::to_string(i) + " tolerance drifted;";
        break;
      }
    }
    require_tol(rep, "onaxis", 1e-8, ok, why);
    require_tol(rep, "offaxis", 1e-7, ok, why);
    require_tol(rep, "margin", 0.1, ok, why);
    gate.report(3, "Voronoi-combination kernel identity", ok,
                "200 on-axis at 1e-8 + 20 off-axis at 1e-7, max residual " +
                    fmt_resid(rep.max_residual) + why);
  }

  // ------------------------------------------------------------------
  // Criterion 4: long-element Kloosterman factorization, exhaustive over
  // D1 * D2 <= 36 and all Fourier indices in {0,1,2}^4, absolute tolerance
  // 1e-7 * D1 * D2 per modulus pair.
  {
    bool ok = true;
    std::string why;
    SuiteConfig cfg;
    cfg.suite = "kloosterman-kn";
    VerificationReport rep = run_checked(cfg, 140, ok, why);
    require_cap(rep, "product", 36, ok, why);
    require_cap(rep, "index", 2, ok, why);
    require_tol(rep, "scaled", 1e-7, ok, why);
    gate.report(4, "Kloosterman factorization of the long-element sum", ok,
                "140 modulus pairs (D1 D2 <= 36), indices {0,1,2}^4, max residual " +
                    fmt_resid(rep.max_residual) + why);
  }

  // ------------------------------------------------------------------
  // Criterion 5: Hecke relations, Hermitian symmetry, both Mobius
  // inversions, and the composite-index recursions over every index triple
  // with n*m1*m2 <= 10^4 for 10 random Satake assignments (tolerance
  // 1e-10), plus the degree-9 local Rankin-Selberg factorization through
  // order 8 on 100 random triples (tolerance 1e-9).
  {
    bool ok = true;
    std::string why;
    const auto t0 = std::chrono::steady_clock::now();
    SuiteConfig hecke;
    hecke.suite = "hecke";
    hecke.cap["product"] = 10000;
    VerificationReport hrep = run_checked(hecke, 10, ok, why);
    require_tol(hrep, "residual", 1e-10, ok, why);
    require_cap(hrep, "product", 10000, ok, why);
    SuiteConfig rankin;
    rankin.suite = "rankin-local";
    VerificationReport rrep = run_checked(rankin, 100, ok, why);
    require_cap(rrep, "order", 8, ok, why);
    require_tol(rrep, "residual", 1e-9, ok, why);
    gate.report(5, "Hecke algebra identities and local Rankin-Selberg", ok,
                "10 assignments x all triples <= 10^4 at 1e-10; order-8 series "
                "on 100 triples at 1e-9; " +
                    fmt_secs(seconds_since(t0)) + why);
  }

  // ------------------------------------------------------------------
  // Criterion 6: gamma reflection identities on 50 samples at 1e-10; test
  // function normalization h(mu0) = 1 and forced zero set at 1e-10 on 50
  // samples; spectral measure symmetry/zero/pole structure on 50 samples at
  // 1e-10; contour independence of the long-element kernel integral at 1e-6.
  {
    bool ok = true;
    std::string why;
    SuiteConfig gamma;
    gamma.suite = "gamma-identities";
    VerificationReport grep_ = run_checked(gamma, 50, ok, why);
    SuiteConfig tf;
    tf.suite = "test-function";
    VerificationReport trep = run_checked(tf, 50, ok, why);
    SuiteConfig spec;
    spec.suite = "spec-measure";
    VerificationReport srep = run_checked(spec, 50, ok, why);
    SuiteConfig kw4;
    kw4.suite = "kw4-contour";
    VerificationReport krep = run_checked(kw4, 2, ok, why);
    for (const VerificationReport* r : {&grep_, &trep, &srep})
      require_tol(*r, "residual", 1e-10, ok, why);
    require_tol(krep, "residual", 1e-6, ok, why);
    gate.report(6, "gamma identities, test function, spectral measure, kw4 contour",
                ok,
                "50+50+50 samples at 1e-10; contour agreement " +
                    fmt_resid(krep.max_residual) + " < 1e-6" + why);
  }

  // ------------------------------------------------------------------
  // Criterion 7: Weil bound |S(n, m; p)| <= 2 sqrt(p) for every prime
  // p <= 101 and all 1 <= n, m < p (defect tolerance 1e-9).
  {
    bool ok = true;
    std::string why;
    SuiteConfig cfg;
    cfg.suite = "weil";
    VerificationReport rep = run_checked(cfg, 26, ok, why);
    require_cap(rep, "prime", 101, ok, why);
    require_tol(rep, "defect", 1e-9, ok, why);
    gate.report(7, "Weil bound for classical Kloosterman sums", ok,
                "26 primes <= 101, all nonzero residue pairs, worst defect " +
                    fmt_resid(rep.max_residual) + why);
  }

  std::printf("acceptance: %d/%d criteria satisfied\n", gate.passed,
              gate.total);
  return gate.passed == gate.total ? 0 : 1;
}
