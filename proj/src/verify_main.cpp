// verify: command-line driver for the verification suites.
//
//   verify <suite>... [--seed N] [--samples N] [--tol name=value]...
//          [--cap name=value]... [--report path.json] [--programs dir]
//
// Exit status: 0 when every selected suite passes, 1 when any case fails,
// 2 on usage errors (unknown suite, malformed option, unknown tol/cap name,
// --report with more than one suite).
//
// Reports are byte-deterministic for a fixed (suite, seed, config, version):
// per-case wall time is never written into the report (the time_ms field is
// always 0); --timings prints measured per-suite wall time to stdout only.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gl3verify/report.hpp"
#include "gl3verify/suites.hpp"
#include "gl3verify/version.hpp"

namespace {

// Splits "name=value" at the first '='. Throws CLI::ValidationError on a
// missing separator or empty name so the failure surfaces as a usage error.
std::pair<std::string, std::string> split_assignment(const std::string& text,
                                                     const char* option) {
  auto pos = text.find('=');
  if (pos == std::string::npos || pos == 0)
    throw CLI::ValidationError(option,
                               "expected name=value, got '" + text + "'");
  return {text.substr(0, pos), text.substr(pos + 1)};
}

double parse_double(const std::string& text, const char* option) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(option, "'" + text + "' is not a number");
  }
}

std::int64_t parse_int(const std::string& text, const char* option) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(option, "'" + text + "' is not an integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical verification suites for the GL(3) spectral toolkit"};
  app.name("verify");

  std::vector<std::string> suites;
  app.add_option("suites", suites, "suites to run (see --list)")
      ->take_all();
  bool list_only = false;
  app.add_flag("--list", list_only, "list available suites and exit");
  std::uint64_t seed = gl3verify::kDefaultSeed;
  app.add_option("--seed", seed, "base seed for the per-case RNG streams");
  std::int64_t samples = -1;
  app.add_option("--samples", samples,
                 "sample count for randomized suites (0 = vacuous pass)")
      ->check(CLI::NonNegativeNumber);
  std::vector<std::string> tol_args, cap_args;
  app.add_option("--tol", tol_args,
                 "tolerance override, name=value (repeatable)");
  app.add_option("--cap", cap_args,
                 "enumeration cap override, name=value (repeatable)");
  std::string report_path;
  app.add_option("--report", report_path,
                 "write the JSON report here (single suite only)");
  std::string programs_dir;
  app.add_option("--programs", programs_dir,
                 "directory of .lp files for the lp-paper suite");
  bool timings = false;
  app.add_flag("--timings", timings,
               "print per-suite wall time (stdout only; never in reports)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the error message
    return 2;
  }

  if (list_only) {
    for (const std::string& name : gl3verify::suite_names())
      std::printf("%s\n", name.c_str());
    return 0;
  }

  if (suites.empty()) {
    std::fprintf(stderr, "verify: no suite named; choose from:\n");
    for (const std::string& name : gl3verify::suite_names())
      std::fprintf(stderr, "  %s\n", name.c_str());
    return 2;
  }
  const auto& known = gl3verify::suite_names();
  for (const std::string& s : suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      std::fprintf(stderr, "verify: unknown suite '%s'\n", s.c_str());
      return 2;
    }
  if (!report_path.empty() && suites.size() > 1) {
    std::fprintf(stderr,
                 "verify: --report accepts exactly one suite (%zu given)\n",
                 suites.size());
    return 2;
  }

  gl3verify::SuiteConfig base;
  base.seed = seed;
  if (samples >= 0) base.samples = samples;
  base.programs_dir = programs_dir;
  try {
    for (const std::string& arg : tol_args) {
      auto [name, value] = split_assignment(arg, "--tol");
      base.tol[name] = parse_double(value, "--tol");
    }
    for (const std::string& arg : cap_args) {
      auto [name, value] = split_assignment(arg, "--cap");
      base.cap[name] = parse_int(value, "--cap");
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bool all_pass = true;
  for (const std::string& name : suites) {
    gl3verify::SuiteConfig cfg = base;
    cfg.suite = name;
    gl3verify::VerificationReport rep;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      rep = gl3verify::run_suite(cfg);
    } catch (const std::exception& e) {
      // Suite-level throws are configuration problems (unknown tol/cap
      // name, missing programs directory): usage errors, not case failures.
      std::fprintf(stderr, "verify: %s\n", e.what());
      return 2;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  t0)
            .count();
    std::size_t passed = 0;
    for (const auto& c : rep.cases) passed += c.pass ? 1u : 0u;
    std::printf("%-16s %4zu/%zu cases passed, max residual %.3g, seed %llu: %s\n",
                name.c_str(), passed, rep.cases.size(), rep.max_residual,
                static_cast<unsigned long long>(rep.seed),
                rep.pass ? "PASS" : "FAIL");
    if (timings) std::printf("%-16s wall time %.1f ms\n", name.c_str(), ms);
    if (!rep.pass) {
      all_pass = false;
      for (const auto& c : rep.cases)
        if (!c.pass)
          std::printf("  case %lld: residual %.6g > tol %.6g  [%s]\n",
                      static_cast<long long>(c.index), c.residual, c.tolerance,
                      c.input.c_str());
    }
    if (!report_path.empty()) {
      try {
        gl3verify::emit_report(rep, report_path);
      } catch (const std::exception& e) {
        std::fprintf(stderr, "verify: %s\n", e.what());
        return 2;
      }
      std::printf("report written to %s\n", report_path.c_str());
    }
  }
  return all_pass ? 0 : 1;
}
