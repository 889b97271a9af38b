#include "gl3verify/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gl3verify/suites.hpp"

using namespace gl3verify;

namespace {

SuiteConfig make_cfg(const std::string& suite, std::int64_t samples,
                     std::uint64_t seed = kDefaultSeed) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.seed = seed;
  cfg.samples = samples;
  return cfg;
}

}  // namespace

TEST_CASE("suite roster", "[report]") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 11);
  REQUIRE(names.front() == "hecke");
  REQUIRE(names.back() == "euler-paper");
  SuiteConfig bad;
  bad.suite = "no-such-suite";
  REQUIRE_THROWS_AS(run_suite(bad), std::invalid_argument);
}

TEST_CASE("reports are byte-deterministic for fixed (suite, seed, config)",
          "[report]") {
  SuiteConfig cfg = make_cfg("gamma-identities", 5, 11);
  VerificationReport a = run_suite(cfg);
  VerificationReport b = run_suite(cfg);
  REQUIRE(report_to_string(a) == report_to_string(b));
  REQUIRE(a.cases.size() == 5);
  REQUIRE(a.pass);
  for (const auto& c : a.cases) {
    REQUIRE(c.pass);
    REQUIRE(c.residual <= c.tolerance);
    REQUIRE(c.time_ms == 0.0);
  }

  // A different seed must change the sampled inputs (and so the digests).
  VerificationReport c = run_suite(make_cfg("gamma-identities", 5, 12));
  REQUIRE(report_to_string(a) != report_to_string(c));
  bool any_digest_differs = false;
  for (std::size_t i = 0; i < a.cases.size(); ++i)
    any_digest_differs = any_digest_differs || a.cases[i].input != c.cases[i].input;
  REQUIRE(any_digest_differs);
}

TEST_CASE("serialized reports parse back to the same bytes", "[report]") {
  VerificationReport rep = run_suite(make_cfg("spec-measure", 4));
  const std::string text = report_to_string(rep);
  VerificationReport back = parse_report(text);
  REQUIRE(report_to_string(back) == text);
  REQUIRE(back.suite == "spec-measure");
  REQUIRE(back.version == kVersion);
  REQUIRE(back.seed == kDefaultSeed);
  REQUIRE(back.config.samples == 4);
  REQUIRE(back.cases.size() == rep.cases.size());
  REQUIRE(back.pass == rep.pass);
}

TEST_CASE("report files round-trip through disk", "[report]") {
  VerificationReport rep = run_suite(make_cfg("test-function", 3));
  const auto path =
      std::filesystem::temp_directory_path() / "gl3verify_report_test.json";
  emit_report(rep, path.string());
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  REQUIRE(text.str() == report_to_string(rep));
  std::filesystem::remove(path);
}

TEST_CASE("strict parsing rejects malformed reports", "[report]") {
  VerificationReport rep = run_suite(make_cfg("gamma-identities", 2));
  const nlohmann::json good = report_to_json(rep);
  REQUIRE_NOTHROW(parse_report(good.dump()));

  SECTION("unknown top-level field") {
    nlohmann::json j = good;
    j["extra"] = 1;
    REQUIRE_THROWS_AS(parse_report(j.dump()), std::invalid_argument);
  }
  SECTION("unknown case field") {
    nlohmann::json j = good;
    j["cases"][0]["note"] = "x";
    REQUIRE_THROWS_AS(parse_report(j.dump()), std::invalid_argument);
  }
  SECTION("missing top-level field") {
    nlohmann::json j = good;
    j.erase("seed");
    REQUIRE_THROWS_AS(parse_report(j.dump()), std::invalid_argument);
  }
  SECTION("missing case field") {
    nlohmann::json j = good;
    j["cases"][0].erase("residual");
    REQUIRE_THROWS_AS(parse_report(j.dump()), std::invalid_argument);
  }
  SECTION("unsupported schema version") {
    nlohmann::json j = good;
    j["schema_version"] = 2;
    REQUIRE_THROWS_AS(parse_report(j.dump()), std::invalid_argument);
  }
  SECTION("wrong field type") {
    nlohmann::json j = good;
    j["seed"] = "twenty";
    REQUIRE_THROWS_AS(parse_report(j.dump()), std::invalid_argument);
  }
  SECTION("aggregate pass flag must match the case list") {
    nlohmann::json j = good;
    j["pass"] = !j["pass"].get<bool>();
    REQUIRE_THROWS_AS(parse_report(j.dump()), std::invalid_argument);
  }
  SECTION("not JSON at all") {
    REQUIRE_THROWS_AS(parse_report("not json"), std::invalid_argument);
  }
}

TEST_CASE("zero samples give a vacuous pass", "[report]") {
  for (const char* suite : {"hecke", "kernel-identity", "euler-paper"}) {
    VerificationReport rep = run_suite(make_cfg(suite, 0));
    CAPTURE(suite);
    if (std::string(suite) == "euler-paper") {
      // euler-paper keeps the trivial triple per (p, m) even at samples=0.
      REQUIRE(rep.cases.size() == 12);
    } else {
      REQUIRE(rep.cases.empty());
    }
    REQUIRE(rep.pass);
    REQUIRE(rep.max_residual <= 1e-9);
  }
}

TEST_CASE("unknown tolerance and cap names are rejected", "[report]") {
  SuiteConfig cfg = make_cfg("weil", 0);
  cfg.tol["nonsense"] = 1.0;
  REQUIRE_THROWS_AS(run_suite(cfg), std::invalid_argument);
  SuiteConfig cfg2 = make_cfg("weil", 0);
  cfg2.cap["bogus"] = 3;
  REQUIRE_THROWS_AS(run_suite(cfg2), std::invalid_argument);
}

TEST_CASE("effective config records overrides", "[report]") {
  SuiteConfig cfg = make_cfg("weil", 0);
  cfg.cap["prime"] = 13;
  cfg.tol["defect"] = 1e-8;
  VerificationReport rep = run_suite(cfg);
  REQUIRE(rep.config.cap.at("prime") == 13);
  REQUIRE(rep.config.tol.at("defect") == 1e-8);
  REQUIRE(rep.config.samples == 0);  // fixed-plan suite
  REQUIRE(rep.cases.size() == 6);    // primes 2, 3, 5, 7, 11, 13
  REQUIRE(rep.pass);
  for (const auto& c : rep.cases) REQUIRE(c.tolerance == 1e-8);
}

TEST_CASE("kloosterman-kn plan is exhaustive over the modulus cap",
          "[report]") {
  SuiteConfig cfg = make_cfg("kloosterman-kn", 0);
  cfg.cap["product"] = 6;
  VerificationReport rep = run_suite(cfg);
  // #{(D1, D2) : D1 * D2 <= 6} = 6 + 3 + 2 + 1 + 1 + 1.
  REQUIRE(rep.cases.size() == 14);
  REQUIRE(rep.pass);
  // Scale-aware tolerance: tol grows with D1 * D2.
  REQUIRE(rep.cases.front().tolerance == 1e-7);
  double max_tol = 0.0;
  for (const auto& c : rep.cases) max_tol = std::max(max_tol, c.tolerance);
  REQUIRE(max_tol == 6e-7);
}

TEST_CASE("lp-paper suite checks the five bundled programs exactly",
          "[report]") {
  VerificationReport rep = run_suite(make_cfg("lp-paper", 0));
  REQUIRE(rep.cases.size() == 5);
  REQUIRE(rep.pass);
  REQUIRE(rep.max_residual == 0.0);
  for (const auto& c : rep.cases) {
    REQUIRE(c.tolerance == 0.0);
    REQUIRE(c.input.find("optimum=exact") != std::string::npos);
    REQUIRE(c.input.find("witness=attains") != std::string::npos);
  }
  // The five bundled programs appear in roster order in the digests.
  REQUIRE(rep.cases[0].input.find("prelim2-diag") != std::string::npos);
  REQUIRE(rep.cases[4].input.find("bound-119-120") != std::string::npos);
}

TEST_CASE("euler-paper smoke: trivial triples at one prime", "[report]") {
  SuiteConfig cfg = make_cfg("euler-paper", 0);
  cfg.cap["prime"] = 2;
  cfg.cap["mexp"] = 0;
  VerificationReport rep = run_suite(cfg);
  REQUIRE(rep.cases.size() == 1);
  REQUIRE(rep.pass);
  REQUIRE(rep.cases[0].input == "p=2 m=0 triple=trivial");
  REQUIRE(rep.cases[0].residual < 1e-12);
}

TEST_CASE("case failures carry the sentinel and the reason", "[report]") {
  // A pole margin wider than the sampling window makes the ordinate sampler
  // exhaust: the case must fail with the sentinel residual and a recorded
  // reason, and the aggregate must fail with it.
  SuiteConfig cfg = make_cfg("kernel-identity", 1);
  cfg.tol["margin"] = 10.0;
  VerificationReport rep = run_suite(cfg);
  REQUIRE(rep.cases.size() == 1);
  REQUIRE_FALSE(rep.pass);
  REQUIRE(rep.cases[0].residual == kErrorResidualSentinel);
  REQUIRE(rep.cases[0].input.find("error:") != std::string::npos);
  // The failed report still serializes and parses.
  REQUIRE_NOTHROW(parse_report(report_to_string(rep)));
}

TEST_CASE("kernel-identity samples split on- and off-axis", "[report]") {
  SuiteConfig cfg = make_cfg("kernel-identity", 20);
  VerificationReport rep = run_suite(cfg);
  REQUIRE(rep.cases.size() == 22);  // 20 on-axis + 20/10 off-axis
  REQUIRE(rep.pass);
  for (std::size_t i = 0; i < 20; ++i) {
    REQUIRE(rep.cases[i].tolerance == 1e-8);
    REQUIRE(rep.cases[i].input.find("s1=(0,") != std::string::npos);
  }
  for (std::size_t i = 20; i < 22; ++i) {
    REQUIRE(rep.cases[i].tolerance == 1e-7);
    REQUIRE(rep.cases[i].input.find("s1=(0,") == std::string::npos);
  }
}
