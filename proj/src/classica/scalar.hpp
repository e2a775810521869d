#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "classica/error.hpp"
#include "classica/rational.hpp"

namespace classica {

/// Dual-mode coefficient value: exact rational or IEEE double.
///
/// Arithmetic between two exact values stays exact; mixing an exact value
/// with a floating one demotes the result to floating. Exactness is a
/// property of the value, so containers (series, polynomials) derive their
/// mode from their entries.
class Scalar {
public:
  Scalar() : exact_(true), q_(0), f_(0.0) {}
  Scalar(int v) : exact_(true), q_(v), f_(double(v)) {}
  Scalar(long long v) : exact_(true), q_(v), f_(double(v)) {}
  Scalar(const Rational& q) : exact_(true), q_(q), f_(q.convert_to<double>()) {}
  Scalar(BigInt num, BigInt den) : Scalar(Rational(std::move(num), std::move(den))) {}

  /// Floating value; never exact even when the double is integral.
  static Scalar real(double v) {
    Scalar s;
    s.exact_ = false;
    s.q_ = 0;
    s.f_ = v;
    return s;
  }

  /// Exact value from a dyadic double (0.5, -3.0, ...). The conversion is
  /// always exact because doubles are binary rationals.
  static Scalar exact_from_double(double v) {
    if (!std::isfinite(v)) fail(errc::nonfinite, "cannot make an exact scalar from a non-finite double");
    Rational q(v);
    return Scalar(q);
  }

  bool exact() const { return exact_; }
  double as_double() const { return exact_ ? q_.convert_to<double>() : f_; }
  const Rational& rat() const {
    if (!exact_) fail(errc::domain, "floating scalar has no exact rational value");
    return q_;
  }

  bool is_zero() const { return exact_ ? q_.is_zero() : f_ == 0.0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ + b.q_));
    return real(a.as_double() + b.as_double());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ - b.q_));
    return real(a.as_double() - b.as_double());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(Rational(a.q_ * b.q_));
    return real(a.as_double() * b.as_double());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
      if (b.q_.is_zero()) fail(errc::domain, "exact division by zero");
      return Scalar(Rational(a.q_ / b.q_));
    }
    return real(a.as_double() / b.as_double());
  }
  Scalar operator-() const { return exact_ ? Scalar(Rational(-q_)) : real(-f_); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.q_ == b.q_;
    return a.as_double() == b.as_double();
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.q_ < b.q_;
    return a.as_double() < b.as_double();
  }

  friend Scalar abs(const Scalar& a) {
    if (a.exact_) return Scalar(Rational(a.q_ < 0 ? -a.q_ : a.q_));
    return real(std::fabs(a.f_));
  }

  Scalar pow(unsigned e) const {
    Scalar r(1);
    Scalar base = *this;
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  }

  /// Demoted copy (floating mode), regardless of current mode.
  Scalar demoted() const { return real(as_double()); }

  std::string str() const;

private:
  bool exact_;
  Rational q_;
  double f_;
};

inline std::string Scalar::str() const {
  if (exact_) return format_rational(q_);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", f_);
  return buf;
}

}  // namespace classica
