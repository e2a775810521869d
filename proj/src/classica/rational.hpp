#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "classica/error.hpp"

namespace classica {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q", or "-p/q" with arbitrary-precision integers.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) fail(errc::parse, "rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    fail(errc::parse, "bad rational literal '" + text + "'");
  }
}

// Canonical "p/q" form (q > 0, gcd(p,q) = 1), denominator always present.
inline std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace classica
