// End-to-end checks of the five bundled piecewise-linear programs: the
// embedded copies match the on-disk data files byte for byte, the exact
// solver reproduces every published reference optimum with zero
// tolerance, the published attaining points are feasible and attain the
// optimum, and the DNF branch accounting matches frozen counts (both the
// deduplicated count actually enumerated and the no-sharing upper
// bound, which is strictly larger exactly when a subexpression repeats).

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "gl3verify/paper_programs.hpp"
#include "gl3verify/plp.hpp"
#include "gl3verify/plp_parser.hpp"
#include "gl3verify/rational.hpp"

using gl3verify::dnf_branch_bound;
using gl3verify::dnf_branch_count;
using gl3verify::evaluate_point;
using gl3verify::NamedProgram;
using gl3verify::paper_programs;
using gl3verify::parse_program;
using gl3verify::Rational;
using gl3verify::solve;
using gl3verify::SolveStatus;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Frozen {
  const char* name;
  long long opt_num, opt_den;
  long long branches;  // deduplicated DNF branch count
  long long bound;     // no-sharing occurrence bound
};

// Branch counts computed independently by the reference enumerator over
// the same program texts.
constexpr Frozen kFrozen[] = {
    {"prelim2-diag", 5, 6, 24, 24},
    {"prelim2-offdiag", 14, 15, 96, 96},
    {"bound-31-32", 31, 32, 48, 96},
    {"bound-1591-1600", 1591, 1600, 576, 6912},
    {"bound-119-120", 119, 120, 12, 12},
};

}  // namespace

TEST_CASE("programs: embedded texts match the data files", "[programs]") {
  for (const NamedProgram& np : paper_programs()) {
    const std::string path =
        std::string(GL3VERIFY_PROGRAM_DIR) + "/" + np.name + ".lp";
    INFO("program " << np.name);
    REQUIRE(np.text == read_file(path));
  }
}

TEST_CASE("programs: expected roster", "[programs]") {
  REQUIRE(paper_programs().size() == 5);
  for (size_t i = 0; i < 5; ++i) {
    REQUIRE(paper_programs()[i].name == kFrozen[i].name);
    REQUIRE(paper_programs()[i].optimum ==
            Rational(kFrozen[i].opt_num, kFrozen[i].opt_den));
  }
}

TEST_CASE("programs: exact optima and branch accounting", "[programs]") {
  for (size_t i = 0; i < 5; ++i) {
    const NamedProgram& np = paper_programs()[i];
    INFO("program " << np.name);
    const auto prog = parse_program(np.text);
    REQUIRE(dnf_branch_count(prog) == kFrozen[i].branches);
    REQUIRE(dnf_branch_bound(prog) == kFrozen[i].bound);

    const auto sol = solve(prog);
    REQUIRE(sol.status == SolveStatus::kOptimal);
    REQUIRE(sol.value == np.optimum);  // zero tolerance
    REQUIRE(sol.branches_enumerated == kFrozen[i].branches);

    // The solver's own argmax must check out against the program.
    const auto at_argmax = evaluate_point(prog, sol.argmax);
    REQUIRE(at_argmax.feasible);
    REQUIRE(at_argmax.objective == sol.value);
  }
}

TEST_CASE("programs: published witnesses attain the optima", "[programs]") {
  for (const NamedProgram& np : paper_programs()) {
    INFO("program " << np.name);
    const auto prog = parse_program(np.text);
    // Every program variable appears in the published assignment.
    REQUIRE(np.witness.size() == prog.variables.size());
    for (const auto& [vname, nonneg] : prog.variables) {
      (void)nonneg;
      REQUIRE(np.witness.count(vname) == 1);
    }
    const auto chk = evaluate_point(prog, np.witness);
    REQUIRE(chk.feasible);
    REQUIRE(chk.objective == np.optimum);
  }
}

TEST_CASE("programs: witnesses are not degenerate", "[programs]") {
  // Guard against a silently trivial check: each published point has at
  // least one nonzero coordinate and the all-zero point does NOT attain
  // the optimum for any of the bundled programs.
  for (const NamedProgram& np : paper_programs()) {
    INFO("program " << np.name);
    bool any_nonzero = false;
    for (const auto& [vname, val] : np.witness) {
      (void)vname;
      if (val != 0) any_nonzero = true;
    }
    REQUIRE(any_nonzero);
    const auto prog = parse_program(np.text);
    const std::map<std::string, Rational> origin{};
    const auto at0 = evaluate_point(prog, origin);
    if (at0.feasible) {
      REQUIRE(at0.objective != np.optimum);
    }
  }
}
