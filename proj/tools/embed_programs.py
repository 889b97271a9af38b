#!/usr/bin/env python3
"""Generates include/gl3verify/paper_programs.hpp.

Embeds the bundled .lp program texts byte-identically (raw string
literals) together with their published reference optima and attaining
points, so the library works without access to the data directory and a
test can assert that the embedded copies never drift from the files.
"""

import os

HERE = os.path.dirname(os.path.abspath(__file__))
PROGDIR = os.path.join(HERE, "..", "data", "programs")
OUT = os.path.join(HERE, "..", "include", "gl3verify", "paper_programs.hpp")

# (name, optimum, witness) with rationals as (num, den) pairs; the witness
# is the complete published assignment including explicit zeros.
PROGRAMS = [
    (
        "prelim2-diag",
        (5, 6),
        [("m0", 0, 1), ("m", 0, 1), ("n00", 0, 1), ("n10", 0, 1),
         ("n0", 0, 1), ("d00", 0, 1), ("d01", 0, 1), ("d10", 0, 1),
         ("d20", 0, 1), ("d0", 0, 1), ("d1", 0, 1), ("d2", 1, 3),
         ("f0", 0, 1), ("g0", 0, 1), ("g", 1, 6), ("n", 1, 1),
         ("f", 1, 2)],
    ),
    (
        "prelim2-offdiag",
        (14, 15),
        [("m0", 0, 1), ("m", 0, 1), ("n00", 0, 1), ("n10", 0, 1),
         ("n0", 0, 1), ("d00", 0, 1), ("d01", 0, 1), ("d10", 0, 1),
         ("d20", 0, 1), ("d0", 0, 1), ("d1", 0, 1), ("d2", 1, 5),
         ("f0", 0, 1), ("g0", 0, 1), ("g", 0, 1), ("n", 4, 5),
         ("f", 2, 5)],
    ),
    (
        "bound-31-32",
        (31, 32),
        [("nu0", 0, 1), ("g0", 0, 1), ("n00", 0, 1), ("f0", 0, 1),
         ("d00", 0, 1), ("n10", 0, 1), ("d01", 0, 1), ("d10", 0, 1),
         ("d20", 0, 1), ("nu", 0, 1), ("n0", 0, 1), ("d0", 0, 1),
         ("d1", 0, 1), ("d2", 9, 40), ("g", 1, 32), ("h1", 0, 1),
         ("h2", 0, 1), ("n", 67, 80), ("y", -13, 60)],
    ),
    (
        "bound-1591-1600",
        (1591, 1600),
        [("nu0", 0, 1), ("g0", 0, 1), ("tau10", 0, 1), ("f0", 0, 1),
         ("d11", 0, 1), ("n10", 0, 1), ("d01", 0, 1), ("d10", 0, 1),
         ("d20", 0, 1), ("nu", 93, 400), ("r", 0, 1), ("r0", 0, 1),
         ("s10", 0, 1), ("s", 0, 1), ("d0", 0, 1), ("d2", 93, 400),
         ("g", 0, 1), ("h1", 0, 1), ("h2", 0, 1), ("n1", 0, 1),
         ("n", 121, 160), ("c0", 0, 1), ("k0", 0, 1), ("alpha", 0, 1),
         ("b", 0, 1), ("a", 0, 1), ("y", -121, 600), ("z", -121, 200),
         ("nuprime", 0, 1)],
    ),
    (
        "bound-119-120",
        (119, 120),
        [("nu0", 0, 1), ("g0", 0, 1), ("r0", 0, 1), ("t10", 0, 1),
         ("f0", 0, 1), ("d21", 0, 1), ("d01", 0, 1), ("d10", 0, 1),
         ("d20", 0, 1), ("nu", 1, 320), ("r", 0, 1), ("s", 0, 1),
         ("d0", 0, 1), ("g", 1, 960), ("h1", 0, 1), ("h2", 0, 1),
         ("c0", 0, 1), ("k0", 0, 1), ("n1", 0, 1), ("m0", 0, 1),
         ("alpha0", 0, 1), ("alpha", 0, 1), ("omega", 0, 1),
         ("omega0", 0, 1), ("a0", 0, 1), ("a", 0, 1), ("b", 0, 1),
         ("d", 1, 192)],
    ),
]


def rational(num, den):
    if den == 1:
        return f"Rational({num})"
    return f"Rational({num}, {den})"


def main():
    parts = []
    parts.append("""#pragma once

// Bundled piecewise-linear programs with their published reference optima
// and attaining points. Generated by tools/embed_programs.py from
// data/programs/*.lp; do not edit by hand - the embedded texts must stay
// byte-identical to the data files (a test enforces this).

#include <map>
#include <string>
#include <vector>

#include "gl3verify/rational.hpp"

namespace gl3verify {

struct NamedProgram {
  std::string name;
  std::string text;  // byte-identical to data/programs/<name>.lp
  Rational optimum;  // published reference optimum
  std::map<std::string, Rational> witness;  // published attaining point
};

inline const std::vector<NamedProgram>& paper_programs() {
  static const std::vector<NamedProgram> programs{
""")
    for name, (opt_num, opt_den), witness in PROGRAMS:
        with open(os.path.join(PROGDIR, name + ".lp"), "rb") as fh:
            text = fh.read().decode()
        if ")lp\"" in text:
            raise ValueError(f"{name}: text collides with raw delimiter")
        parts.append("      NamedProgram{\n")
        parts.append(f'          "{name}",\n')
        parts.append(f'          R"lp({text})lp",\n')
        parts.append(f"          {rational(opt_num, opt_den)},\n")
        entries = ",\n           ".join(
            f'{{"{v}", {rational(n, d)}}}' for v, n, d in witness)
        parts.append(f"          {{{entries}}}}},\n")
    parts.append("""  };
  return programs;
}

}  // namespace gl3verify
""")
    with open(OUT, "w") as fh:
        fh.write("".join(parts))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
