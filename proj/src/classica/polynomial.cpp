#include "classica/polynomial.hpp"

#include <algorithm>

namespace classica {

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.exact(); });
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc(0);
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[size_t(k)];
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[size_t(k)].as_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Scalar> out(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = Scalar(int(k)) * c_[k];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  if (c_.empty()) return Polynomial();
  std::vector<Scalar> out(c_.size() + 1, Scalar(0));
  for (size_t k = 0; k < c_.size(); ++k) out[k + 1] = c_[k] / Scalar(int(k) + 1);
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(int(k)) + b.coeff(int(k));
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(int(k)) - b.coeff(int(k));
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  std::vector<Scalar> out = c_;
  for (Scalar& v : out) v *= s;
  return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (size_t k = 0; k < a.c_.size(); ++k)
    if (!(a.c_[k] == b.c_[k])) return false;
  return true;
}

}  // namespace classica
