#pragma once

// Exact arbitrary-precision arithmetic for the linear-programming and
// integer-divisibility machinery. Everything that feeds an "exact
// optimum" claim runs on Rational; BigInt backs divisibility checks
// whose intermediate products overflow 64 bits.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gl3verify {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline double rational_to_double(const Rational& r) {
  return r.convert_to<double>();
}

}  // namespace gl3verify
