#pragma once

#include <vector>

#include "classica/scalar.hpp"

namespace classica {

/// Dense univariate polynomial, ascending coefficients. The zero polynomial
/// is the empty coefficient list.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const { return (k >= 0 && k < int(c_.size())) ? c_[size_t(k)] : Scalar(0); }
  bool exact() const;

  Scalar eval(const Scalar& x) const;
  double eval(double x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& s) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
  void trim();
  std::vector<Scalar> c_;
};

}  // namespace classica
