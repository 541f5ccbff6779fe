#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "tkklab/error.hpp"

namespace tkk {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; every arithmetic operation in the library is exact.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p", "-p" or "p/q". Rejects q <= 0 and garbage.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw SchemaError("rational denominator must be positive: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw SchemaError("cannot parse rational '" + s + "': " + e.what());
  }
}

}  // namespace tkk
