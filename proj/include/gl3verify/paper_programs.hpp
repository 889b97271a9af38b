#pragma once

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
      NamedProgram{
          "prelim2-diag",
          R"lp(# prelim2-diag
#
# First bound of the preliminary second-moment estimate (diagonal case
# B = C).  Published reference optimum: 5/6, attained at
#   d2 = 1/3, g = 1/6, n = 1, f = 1/2, all other variables 0.

var m0 >= 0;
var m >= 0;
var n00 >= 0;
var n10 >= 0;
var n0 >= 0;
var d00 >= 0;
var d01 >= 0;
var d10 >= 0;
var d20 >= 0;
var d0 >= 0;
var d1 >= 0;
var d2 >= 0;
var f0 >= 0;
var g0 >= 0;
var g >= 0;
var n >= 0;
var f >= 0;

def a := 1 - 2*d00 - 2*d1 - 3*d10 - 3*f0 - 3*g - 3*g0 - 3*f + n - n0 - n00 - n10 - m - m0;
def b := 1 - d0 - 2*d00 - d01 - 2*d1 - 2*d10 + d2 + d20 - 2*f0 - 2*g - 2*g0 - 2*f - 2*n0 - 2*n00 - n10 - m - 2*m0;
def c := -d0 - 2*d00 - d01 + d1 + d10 - 2*d2 - 2*d20 + f - 2*f0 + g - 2*g0 + n0 - 2*n00 - n10 - m - 2*m0;
def astar := 2/3 - 3*m0 - m - 3*n00 - n10 - n0 - 3*d00 - 2*d01 - d20 - d0 - d1 - d2 - 3*f0 - 3*g0 - 2*g;
def q := d0 + d01 + d1 + n + 2*n0 + n00 + m0 - 2*d2 - 2*d20 - f0 - g0 - 1/3;

maximize 1/6*m + 1/2*d0 + 3/4*d2 + 5/6*n + 7/12 - 1/3*m0 - 1/3*n00
  - 5/6*n10 - 7/12*n0 - 1/6*d00 - 1/2*d01 - 5/4*d10 - 1/4*d20
  - 5/12*d1 - 1/4*f - g0 - 5/4*g
  + max(0, 1/2*(d10 + f0 + 2*f - n))
  + max(-f, -1/2*(m0 + d0 + d2 + f + g));

subject to b == c;
subject to b >= 0;
subject to c >= 0;
subject to a/3 <= max(1/2*b, 1/3*b + 1/6*c);
subject to max(7/6*b + 1/3*c, b + q, 2/3*b + 5/6*c) >= astar + d10;
)lp",
          Rational(5, 6),
          {{"m0", Rational(0)},
           {"m", Rational(0)},
           {"n00", Rational(0)},
           {"n10", Rational(0)},
           {"n0", Rational(0)},
           {"d00", Rational(0)},
           {"d01", Rational(0)},
           {"d10", Rational(0)},
           {"d20", Rational(0)},
           {"d0", Rational(0)},
           {"d1", Rational(0)},
           {"d2", Rational(1, 3)},
           {"f0", Rational(0)},
           {"g0", Rational(0)},
           {"g", Rational(1, 6)},
           {"n", Rational(1)},
           {"f", Rational(1, 2)}}},
      NamedProgram{
          "prelim2-offdiag",
          R"lp(# prelim2-offdiag
#
# Second bound of the preliminary second-moment estimate (off-diagonal
# case B != C): the diagonal constraint b == c is dropped and the
# objective picks up the extra loss -1/6*max(b,c) - 1/12*min(b,c).
# Published reference optimum: 14/15, attained at
#   d2 = 1/5, n = 4/5, f = 2/5, all other variables 0.

var m0 >= 0;
var m >= 0;
var n00 >= 0;
var n10 >= 0;
var n0 >= 0;
var d00 >= 0;
var d01 >= 0;
var d10 >= 0;
var d20 >= 0;
var d0 >= 0;
var d1 >= 0;
var d2 >= 0;
var f0 >= 0;
var g0 >= 0;
var g >= 0;
var n >= 0;
var f >= 0;

def a := 1 - 2*d00 - 2*d1 - 3*d10 - 3*f0 - 3*g - 3*g0 - 3*f + n - n0 - n00 - n10 - m - m0;
def b := 1 - d0 - 2*d00 - d01 - 2*d1 - 2*d10 + d2 + d20 - 2*f0 - 2*g - 2*g0 - 2*f - 2*n0 - 2*n00 - n10 - m - 2*m0;
def c := -d0 - 2*d00 - d01 + d1 + d10 - 2*d2 - 2*d20 + f - 2*f0 + g - 2*g0 + n0 - 2*n00 - n10 - m - 2*m0;
def astar := 2/3 - 3*m0 - m - 3*n00 - n10 - n0 - 3*d00 - 2*d01 - d20 - d0 - d1 - d2 - 3*f0 - 3*g0 - 2*g;
def q := d0 + d01 + d1 + n + 2*n0 + n00 + m0 - 2*d2 - 2*d20 - f0 - g0 - 1/3;

maximize 1/6*m + 1/2*d0 + 3/4*d2 + 5/6*n + 7/12 - 1/3*m0 - 1/3*n00
  - 5/6*n10 - 7/12*n0 - 1/6*d00 - 1/2*d01 - 5/4*d10 - 1/4*d20
  - 5/12*d1 - 1/4*f - g0 - 5/4*g
  + max(0, 1/2*(d10 + f0 + 2*f - n))
  + max(-f, -1/2*(m0 + d0 + d2 + f + g))
  - 1/6*max(b, c) - 1/12*min(b, c);

subject to b >= 0;
subject to c >= 0;
subject to a/3 <= max(1/2*b, 1/3*b + 1/6*c);
subject to max(7/6*b + 1/3*c, b + q, 2/3*b + 5/6*c) >= astar + d10;
)lp",
          Rational(14, 15),
          {{"m0", Rational(0)},
           {"m", Rational(0)},
           {"n00", Rational(0)},
           {"n10", Rational(0)},
           {"n0", Rational(0)},
           {"d00", Rational(0)},
           {"d01", Rational(0)},
           {"d10", Rational(0)},
           {"d20", Rational(0)},
           {"d0", Rational(0)},
           {"d1", Rational(0)},
           {"d2", Rational(1, 5)},
           {"f0", Rational(0)},
           {"g0", Rational(0)},
           {"g", Rational(0)},
           {"n", Rational(4, 5)},
           {"f", Rational(2, 5)}}},
      NamedProgram{
          "bound-31-32",
          R"lp(# bound-31-32
#
# Bound for the error after restricting the long character sum by the
# Weil estimate.  The variable y (a dyadic truncation exponent) may be
# negative; all other variables are nonnegative.
# Published reference optimum: 31/32, attained at
#   d2 = 9/40, g = 1/32, n = 67/80, y = -13/60, all other variables 0.

var nu0 >= 0;
var g0 >= 0;
var n00 >= 0;
var f0 >= 0;
var d00 >= 0;
var n10 >= 0;
var d01 >= 0;
var d10 >= 0;
var d20 >= 0;
var nu >= 0;
var n0 >= 0;
var d0 >= 0;
var d1 >= 0;
var d2 >= 0;
var g >= 0;
var h1 >= 0;
var h2 >= 0;
var n >= 0;
var y;

def a := 3*nu0 + nu + 3*n00 + n10 + n0 + 3*d00 + 2*d01 + d10 + d20 + d0 + d1 + d2 + 3*f0 + 3*g0 + 2*g + 2*h1 + 2*h2 - 2/3;
def b := 3*nu0 + nu + 3*n00 + n10 + 2*n0 + 2*d00 + 2*d01 + 2*d0 + d1 + f0 + g0 + 2*h1 + 2*h2 - d20 - d2 - 2/3;
def c := 5*nu0 + 2*nu + 5*n00 + 2*n10 + 2*n0 + 4*d00 + 3*d01 + 3*d0 + d1 + 3*f0 + 3*g0 + 2*h1 + 3*h2 - 1;
def u := 2/3 - nu0 - n00 - d00 - d01 - d0 - f0 - g0 - h2 - 9/20;

maximize 4/3 - 9/2*nu0 - 3/2*nu - 9/2*n00 - 3*n10 - 2*n0 - 7/2*d00
  - 3*d01 - 2*d10 - 1/2*d20 - 2*d0 - d1 - 1/2*d2 - 5/2*f0 - 7/2*g0
  - 2*g - 3*h1 - 3*h2
  + max(0, d2 + g - n/2 + 1/2*max(n + b - y, 1/2*(c - b) - y, -1/2*y))
  + min(n + c - y, 2/3*(n + c))
  + 1/4*(c - b + y);

subject to u + y >= 0;
subject to y <= (c - b)/2;
subject to c - b <= y/2;
subject to n + c <= 3/2*max(c - b, y);
subject to a + max(1/2*(c - b) - 2*y, -c + b - y/2) >= 0;
subject to n + b - 2*y <= max(1/2*(c - b) - 2*y, -c + b - y/2);
)lp",
          Rational(31, 32),
          {{"nu0", Rational(0)},
           {"g0", Rational(0)},
           {"n00", Rational(0)},
           {"f0", Rational(0)},
           {"d00", Rational(0)},
           {"n10", Rational(0)},
           {"d01", Rational(0)},
           {"d10", Rational(0)},
           {"d20", Rational(0)},
           {"nu", Rational(0)},
           {"n0", Rational(0)},
           {"d0", Rational(0)},
           {"d1", Rational(0)},
           {"d2", Rational(9, 40)},
           {"g", Rational(1, 32)},
           {"h1", Rational(0)},
           {"h2", Rational(0)},
           {"n", Rational(67, 80)},
           {"y", Rational(-13, 60)}}},
      NamedProgram{
          "bound-1591-1600",
          R"lp(# bound-1591-1600
#
# Bound for the contribution where the key congruence is not an
# equality.  The variables y and z (dyadic truncation exponents) may be
# negative; all other variables are nonnegative.  The defined quantity
# x4 is carried along from the source estimate but does not enter the
# objective or the constraints.
# Published reference optimum: 1591/1600, attained at
#   nu = 93/400, d2 = 93/400, n = 121/160, y = -121/600, z = -121/200,
#   all other variables 0.

var nu0 >= 0;
var g0 >= 0;
var tau10 >= 0;
var f0 >= 0;
var d11 >= 0;
var n10 >= 0;
var d01 >= 0;
var d10 >= 0;
var d20 >= 0;
var nu >= 0;
var r >= 0;
var r0 >= 0;
var s >= 0;
var s10 >= 0;
var d0 >= 0;
var d2 >= 0;
var g >= 0;
var h1 >= 0;
var h2 >= 0;
var n1 >= 0;
var n >= 0;
var c0 >= 0;
var k0 >= 0;
var alpha >= 0;
var b >= 0;
var a >= 0;
var y;
var z;
var nuprime >= 0;

def A := d2 + d20 + f0 + g0 + n10 + nu0 + nuprime + r0 + s + 2*s10 + tau10;
def B := d2 + d20 + f0 + g + g0 + h1 - n1 + n10 + nu0 + nuprime + tau10;
def x1 := 1 - 3*d0 - 3*d01 - 3*d2 - 3*d20 - 6*f0 - 3*g - 6*g0 - 3*h1
  - 3*h2 + n + 2*n1 - 3*n10 - 6*nu0 - 3*nuprime - r - 4*r0 - 3*s
  - 6*s10 - 6*tau10;
def x2 := 1/3 - d0 - d01 - d2 - d20 - 2*f0 - 2*g0 - h2 - n10 - 2*nu0
  - nuprime - 2*r0 - s - 3*s10 - 2*tau10;
def x3 := 2/3 - nu0 - tau10 - r0 - s10 - d01 - d0 - f0 - g0 - h2 - 93/200;
def x4 := -1 + 3*d0 + 3*d01 + 3*f0 + 3*g0 + 2*h1 + 3*h2 + 2*n10 + 5*nu0
  + 2*nuprime + r + 4*r0 + 3*s + 6*s10 + 5*tau10;

maximize 1/3 - a + alpha - b - c0 + d0 - d10 + 2*d2 + d20 + 2*f0 - k0
  - 2*n1 + n10 + 2*nu0 + 2*nuprime - (B - b - d20 - nu) - (A - a)
  + 2*y - z
  + min(x1 + z, 2/3*(x1 + z))
  + min(z - 3*y, 2/3*(z - 3*y))
  - 1/4*(x2 - y);

subject to z <= 3*y + 3*min(max(-x2/2 - y, -1/2*y), max(x2 + z - y, -1/2*x2 - y, x2 + y/2));
subject to x1 + z <= 3*max(min(max(-x2/2 - y, -1/2*y), max(x2 + z - y, -1/2*x2 - y, x2 + y/2)), x2 + z - y);
subject to x2 + 2*y <= 0;
subject to y + 2*x2 >= 0;
subject to x3 >= -y;
subject to n1 <= nuprime + tau10 + d2 + g0 + g + h1 + nu0 + n10 + d20 + f0;
subject to c0 <= f0;
subject to k0 <= nu0 + r0 + s10 + d01 + f0;
subject to alpha <= min(d2 + g, r + s + 2*g, n1);
subject to alpha + nu <= d2 + f0 + g0 + g;
subject to n1 + nu <= nu0 + nuprime + tau10 + n10 + d2 + f0 + g0 + min(n1, g + h1);
subject to b <= B;
subject to a <= A;
subject to n >= B - b - d20 - nu;
)lp",
          Rational(1591, 1600),
          {{"nu0", Rational(0)},
           {"g0", Rational(0)},
           {"tau10", Rational(0)},
           {"f0", Rational(0)},
           {"d11", Rational(0)},
           {"n10", Rational(0)},
           {"d01", Rational(0)},
           {"d10", Rational(0)},
           {"d20", Rational(0)},
           {"nu", Rational(93, 400)},
           {"r", Rational(0)},
           {"r0", Rational(0)},
           {"s10", Rational(0)},
           {"s", Rational(0)},
           {"d0", Rational(0)},
           {"d2", Rational(93, 400)},
           {"g", Rational(0)},
           {"h1", Rational(0)},
           {"h2", Rational(0)},
           {"n1", Rational(0)},
           {"n", Rational(121, 160)},
           {"c0", Rational(0)},
           {"k0", Rational(0)},
           {"alpha", Rational(0)},
           {"b", Rational(0)},
           {"a", Rational(0)},
           {"y", Rational(-121, 600)},
           {"z", Rational(-121, 200)},
           {"nuprime", Rational(0)}}},
      NamedProgram{
          "bound-119-120",
          R"lp(# bound-119-120
#
# Bound showing that only the central term of the final Poisson
# summation survives.  All variables are nonnegative dyadic exponents.
# Published reference optimum: 119/120, attained at
#   nu = 1/320, g = 1/960, d = 1/192, all other variables 0.

var nu0 >= 0;
var g0 >= 0;
var r0 >= 0;
var t10 >= 0;
var f0 >= 0;
var d21 >= 0;
var d01 >= 0;
var d10 >= 0;
var d20 >= 0;
var nu >= 0;
var r >= 0;
var s >= 0;
var d0 >= 0;
var g >= 0;
var h1 >= 0;
var h2 >= 0;
var c0 >= 0;
var k0 >= 0;
var n1 >= 0;
var m0 >= 0;
var alpha0 >= 0;
var alpha >= 0;
var omega >= 0;
var omega0 >= 0;
var a0 >= 0;
var a >= 0;
var b >= 0;
var d >= 0;

def Upsilon := 2/3 - nu0 - t10 - r0 - d01 - d0 - f0 - g0 - h2 - 9/20;
def Z := 1/3 - 2*nu0 - nu - 2*t10 - 2*r0 - s - d01 - d20 - d0 - 2*f0 - 2*g0 - h2;

maximize 1 - 2*nu0 - 4*g0 - 2*r0 - 4*t10 - 2*f0 - r - 2*s - d0 - 3*g
  - 3*h1 - 2*h2 - d21 - 2*d01 - d10 - d20 - c0 - k0 - m0 + alpha
  - omega0 - a0 - a - b - d0 - d
  + 3/2*Upsilon + m0 + alpha0 + omega0 + a0 + d0 + d - Z;

subject to c0 <= f0;
subject to k0 <= nu0 + r0 + d01 + f0;
subject to n1 <= nu + t10 + d20 + f0 + g0 + g + h1;
subject to alpha0 <= min(r + s + 2*g, m0 + n1);
subject to alpha <= min(m0 + g, r + s + 2*g - alpha0, m0 + n1 - alpha0);
subject to alpha + omega <= f0 + g0 + m0 + g;
subject to m0 + n1 + g <= alpha0 + alpha + omega0 + omega + nu0 + nu + t10 + min(m0 + n1, g + h1);
subject to a <= m0 + alpha0 + omega0 + nu0 + nu + t10 + r0 + s + d20 + f0 + g0;
subject to b <= alpha0 + omega0 + nu0 + nu + t10 + d20 + f0 + g0 + g + h1 - n1;
subject to d0 <= alpha0 + omega0 + nu + s;
subject to d <= a + b + m0 + n1 + r + s + 2*g - 2*alpha0 - a + omega + alpha0 + omega0 + nu + s - d0 + nu0 + t10 + r0 + d0 + f0 + g0 + h1 + h2;
subject to alpha0 + alpha + omega + omega0 + nu0 + nu + t10 + m0 + n1 + s <= r + s + 3*g + 2*h1 + b;
subject to 3/2*Upsilon + m0 + alpha0 + omega0 + a0 + d0 + d - Z >= 0;
)lp",
          Rational(119, 120),
          {{"nu0", Rational(0)},
           {"g0", Rational(0)},
           {"r0", Rational(0)},
           {"t10", Rational(0)},
           {"f0", Rational(0)},
           {"d21", Rational(0)},
           {"d01", Rational(0)},
           {"d10", Rational(0)},
           {"d20", Rational(0)},
           {"nu", Rational(1, 320)},
           {"r", Rational(0)},
           {"s", Rational(0)},
           {"d0", Rational(0)},
           {"g", Rational(1, 960)},
           {"h1", Rational(0)},
           {"h2", Rational(0)},
           {"c0", Rational(0)},
           {"k0", Rational(0)},
           {"n1", Rational(0)},
           {"m0", Rational(0)},
           {"alpha0", Rational(0)},
           {"alpha", Rational(0)},
           {"omega", Rational(0)},
           {"omega0", Rational(0)},
           {"a0", Rational(0)},
           {"a", Rational(0)},
           {"b", Rational(0)},
           {"d", Rational(1, 192)}}},
  };
  return programs;
}

}  // namespace gl3verify
