#pragma once

#include <map>
#include <utility>
#include <vector>

#include "classica/scalar.hpp"

namespace classica {

/// Default truncation order for series-producing operations. Reads the
/// CLASSICA_DEFAULT_ORDER environment variable once; falls back to 16.
int default_series_order();

/// Finitely many power-series coefficients c0..cN about an expansion point.
///
/// A series is either exact (every coefficient rational) or floating; the
/// constructor demotes all coefficients to floating as soon as one of them
/// is. Values are immutable after construction.
class TruncatedSeries {
public:
  TruncatedSeries(double center, std::vector<Scalar> coeffs);

  static TruncatedSeries zeros(double center, int order);
  static TruncatedSeries constant(double center, const Scalar& c, int order);

  double center() const { return center_; }
  int order() const { return int(coeffs_.size()) - 1; }
  const Scalar& coeff(int k) const { return coeffs_.at(size_t(k)); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool exact() const { return exact_; }

  /// Copy truncated to the given order (must not exceed the current one).
  TruncatedSeries truncated(int order) const;

private:
  double center_;
  std::vector<Scalar> coeffs_;
  bool exact_;
};

/// a*s + b*t, coefficientwise, at order min(s.order, t.order).
TruncatedSeries series_linear_combine(const Scalar& a, const TruncatedSeries& s, const Scalar& b,
                                      const TruncatedSeries& t);

/// Cauchy product truncated at min(s.order, t.order).
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// Term-by-term derivative; order drops by one. Order-0 input is an error.
TruncatedSeries series_differentiate(const TruncatedSeries& s);

/// Term-by-term antiderivative with the given constant term; order grows by one.
TruncatedSeries series_antiderivative(const TruncatedSeries& s, const Scalar& constant);

/// Horner evaluation of the truncated polynomial at (x - center), in doubles.
double series_eval(const TruncatedSeries& s, double x);

/// Sparse polynomial in two variables with nonnegative integer exponents.
/// Terms are kept in lexicographic (i, j) order; zero coefficients are not
/// stored.
class BivariatePolynomial {
public:
  BivariatePolynomial() = default;

  void add_term(int i, int j, const Scalar& c);

  const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool exact() const;
  int max_x_degree() const;
  int max_y_degree() const;
  int total_degree() const;

  Scalar eval(const Scalar& x, const Scalar& y) const;
  double eval(double x, double y) const;

  BivariatePolynomial partial_x() const;
  BivariatePolynomial partial_y() const;

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ita = a.terms_.begin();
    auto itb = b.terms_.begin();
    for (; ita != a.terms_.end(); ++ita, ++itb) {
      if (ita->first != itb->first || !(ita->second == itb->second)) return false;
    }
    return true;
  }

private:
  std::map<std::pair<int, int>, Scalar> terms_;
};

/// Series of x -> p(x, y(x)) about y's center, truncated at y.order.
TruncatedSeries substitute_series(const BivariatePolynomial& p, const TruncatedSeries& y);

}  // namespace classica
