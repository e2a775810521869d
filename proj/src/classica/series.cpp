#include "classica/series.hpp"

#include <algorithm>
#include <cstdlib>

namespace classica {

int default_series_order() {
  static const int order = [] {
    if (const char* env = std::getenv("CLASSICA_DEFAULT_ORDER")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 1 && v <= 512) return int(v);
    }
    return 16;
  }();
  return order;
}

TruncatedSeries::TruncatedSeries(double center, std::vector<Scalar> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(errc::invalid_argument, "series needs at least the constant coefficient");
  exact_ = std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.exact(); });
  if (!exact_) {
    for (Scalar& c : coeffs_) c = c.demoted();
  }
}

TruncatedSeries TruncatedSeries::zeros(double center, int order) {
  if (order < 0) fail(errc::invalid_argument, "negative series order");
  return TruncatedSeries(center, std::vector<Scalar>(size_t(order) + 1, Scalar(0)));
}

TruncatedSeries TruncatedSeries::constant(double center, const Scalar& c, int order) {
  if (order < 0) fail(errc::invalid_argument, "negative series order");
  std::vector<Scalar> v(size_t(order) + 1, c.exact() ? Scalar(0) : Scalar::real(0.0));
  v[0] = c;
  return TruncatedSeries(center, std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) fail(errc::invalid_argument, "truncation order out of range");
  return TruncatedSeries(center_, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

static void require_same_center(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.center() != t.center()) fail(errc::center_mismatch, "series expansion points differ");
}

TruncatedSeries series_linear_combine(const Scalar& a, const TruncatedSeries& s, const Scalar& b,
                                      const TruncatedSeries& t) {
  require_same_center(s, t);
  int order = std::min(s.order(), t.order());
  std::vector<Scalar> out(size_t(order) + 1);
  for (int k = 0; k <= order; ++k) out[size_t(k)] = a * s.coeff(k) + b * t.coeff(k);
  return TruncatedSeries(s.center(), std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  require_same_center(s, t);
  int order = std::min(s.order(), t.order());
  // Preserve exactness: seed the accumulators with exact zeros and let
  // Scalar promotion decide the mode.
  std::vector<Scalar> out(size_t(order) + 1, Scalar(0));
  for (int i = 0; i <= order; ++i) {
    if (i > s.order()) break;
    for (int j = 0; i + j <= order; ++j) {
      if (j > t.order()) break;
      out[size_t(i + j)] += s.coeff(i) * t.coeff(j);
    }
  }
  return TruncatedSeries(s.center(), std::move(out));
}

TruncatedSeries series_differentiate(const TruncatedSeries& s) {
  if (s.order() < 1) fail(errc::domain, "cannot differentiate an order-0 series");
  std::vector<Scalar> out(size_t(s.order()));
  for (int k = 1; k <= s.order(); ++k) out[size_t(k - 1)] = Scalar(k) * s.coeff(k);
  return TruncatedSeries(s.center(), std::move(out));
}

TruncatedSeries series_antiderivative(const TruncatedSeries& s, const Scalar& constant) {
  std::vector<Scalar> out(size_t(s.order()) + 2);
  out[0] = constant;
  for (int k = 0; k <= s.order(); ++k) out[size_t(k + 1)] = s.coeff(k) / Scalar(k + 1);
  return TruncatedSeries(s.center(), std::move(out));
}

double series_eval(const TruncatedSeries& s, double x) {
  double u = x - s.center();
  double acc = 0.0;
  for (int k = s.order(); k >= 0; --k) acc = acc * u + s.coeff(k).as_double();
  return acc;
}

void BivariatePolynomial::add_term(int i, int j, const Scalar& c) {
  if (i < 0 || j < 0) fail(errc::invalid_argument, "negative exponent in bivariate polynomial");
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool BivariatePolynomial::exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.exact(); });
}

int BivariatePolynomial::max_x_degree() const {
  int d = 0;
  for (const auto& [ij, c] : terms_) d = std::max(d, ij.first);
  return d;
}

int BivariatePolynomial::max_y_degree() const {
  int d = 0;
  for (const auto& [ij, c] : terms_) d = std::max(d, ij.second);
  return d;
}

int BivariatePolynomial::total_degree() const {
  int d = 0;
  for (const auto& [ij, c] : terms_) d = std::max(d, ij.first + ij.second);
  return d;
}

Scalar BivariatePolynomial::eval(const Scalar& x, const Scalar& y) const {
  Scalar acc(0);
  for (const auto& [ij, c] : terms_) acc += c * x.pow(unsigned(ij.first)) * y.pow(unsigned(ij.second));
  return acc;
}

double BivariatePolynomial::eval(double x, double y) const {
  double acc = 0.0;
  for (const auto& [ij, c] : terms_) {
    double t = c.as_double();
    for (int k = 0; k < ij.first; ++k) t *= x;
    for (int k = 0; k < ij.second; ++k) t *= y;
    acc += t;
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::partial_x() const {
  BivariatePolynomial out;
  for (const auto& [ij, c] : terms_) {
    if (ij.first > 0) out.add_term(ij.first - 1, ij.second, Scalar(ij.first) * c);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::partial_y() const {
  BivariatePolynomial out;
  for (const auto& [ij, c] : terms_) {
    if (ij.second > 0) out.add_term(ij.first, ij.second - 1, Scalar(ij.second) * c);
  }
  return out;
}

TruncatedSeries substitute_series(const BivariatePolynomial& p, const TruncatedSeries& y) {
  int order = y.order();
  double center = y.center();
  // x as a series about the expansion point, then powers of x and y by
  // truncated products.
  std::vector<Scalar> xc(size_t(order) + 1, y.exact() ? Scalar(0) : Scalar::real(0.0));
  xc[0] = y.exact() ? Scalar::exact_from_double(center) : Scalar::real(center);
  if (order >= 1) xc[1] = y.exact() ? Scalar(1) : Scalar::real(1.0);
  TruncatedSeries xs(center, std::move(xc));

  int max_i = p.max_x_degree();
  int max_j = p.max_y_degree();
  std::vector<TruncatedSeries> xpow, ypow;
  xpow.reserve(size_t(max_i) + 1);
  ypow.reserve(size_t(max_j) + 1);
  xpow.push_back(TruncatedSeries::constant(center, Scalar(1), order));
  for (int i = 1; i <= max_i; ++i) xpow.push_back(series_mul(xpow.back(), xs));
  ypow.push_back(TruncatedSeries::constant(center, Scalar(1), order));
  for (int j = 1; j <= max_j; ++j) ypow.push_back(series_mul(ypow.back(), y));

  TruncatedSeries acc = TruncatedSeries::zeros(center, order);
  for (const auto& [ij, c] : p.terms()) {
    TruncatedSeries term = series_mul(xpow[size_t(ij.first)], ypow[size_t(ij.second)]);
    acc = series_linear_combine(Scalar(1), acc, c, term);
  }
  return acc;
}

}  // namespace classica
