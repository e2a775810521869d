#include "classica/roots.hpp"

#include <algorithm>
#include <cmath>

namespace classica {

namespace {

using PolyQ = std::vector<Rational>;  // ascending, trimmed, possibly empty (= 0)

void trim(PolyQ& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const PolyQ& p) { return int(p.size()) - 1; }

PolyQ derivative(const PolyQ& p) {
  PolyQ out;
  for (size_t k = 1; k < p.size(); ++k) out.push_back(Rational(int(k)) * p[k]);
  trim(out);
  return out;
}

PolyQ monic(PolyQ p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (Rational& c : p) c /= lead;
  return p;
}

// Remainder of a by b (b nonzero), both ascending.
PolyQ poly_rem(PolyQ a, const PolyQ& b) {
  trim(a);
  while (deg(a) >= deg(b) && !a.empty()) {
    Rational factor = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (size_t k = 0; k < b.size(); ++k) a[size_t(shift) + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Exact quotient a / b (remainder must vanish).
PolyQ poly_div(PolyQ a, const PolyQ& b) {
  trim(a);
  PolyQ q(a.size(), Rational(0));
  while (deg(a) >= deg(b) && !a.empty()) {
    Rational factor = a.back() / b.back();
    int shift = deg(a) - deg(b);
    q[size_t(shift)] = factor;
    for (size_t k = 0; k < b.size(); ++k) a[size_t(shift) + k] -= factor * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyQ r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

// Square-free decomposition: returns (factor, multiplicity) pairs whose
// product with multiplicities reproduces the monic input.
std::vector<std::pair<PolyQ, int>> square_free(PolyQ p) {
  p = monic(std::move(p));
  std::vector<std::pair<PolyQ, int>> out;
  PolyQ g = poly_gcd(p, derivative(p));
  if (deg(g) <= 0) {
    out.emplace_back(std::move(p), 1);
    return out;
  }
  PolyQ w = poly_div(p, g);
  int mult = 1;
  while (deg(w) > 0) {
    PolyQ y = poly_gcd(w, g);
    PolyQ z = poly_div(w, y);
    if (deg(z) > 0) out.emplace_back(monic(std::move(z)), mult);
    w = std::move(y);
    g = poly_div(g, w);
    ++mult;
  }
  return out;
}

std::vector<std::complex<double>> roots_of_monic_double(const std::vector<double>& ascending_with_lead_one) {
  std::vector<std::complex<double>> tail(ascending_with_lead_one.begin(), ascending_with_lead_one.end() - 1);
  return durand_kerner(tail);
}

}  // namespace

std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& monic_tail) {
  const int n = int(monic_tail.size());
  if (n == 0) return {};
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc(1.0, 0.0);
    for (int k = n - 1; k >= 0; --k) acc = acc * z + monic_tail[size_t(k)];
    return acc;
  };
  double bound = 0.0;
  for (const auto& c : monic_tail) bound = std::max(bound, std::abs(c));
  bound = 1.0 + bound;
  std::vector<std::complex<double>> z(size_t(n));
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> w = seed;
  for (int k = 0; k < n; ++k) {
    z[size_t(k)] = w * std::max(1.0, 0.5 * bound);
    w *= seed;
  }
  for (int sweep = 0; sweep < 1000; ++sweep) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> denom(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= z[size_t(k)] - z[size_t(j)];
      if (denom == std::complex<double>(0.0, 0.0)) denom = std::complex<double>(1e-30, 0.0);
      std::complex<double> delta = eval(z[size_t(k)]) / denom;
      z[size_t(k)] -= delta;
      worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[size_t(k)])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

std::vector<RootEntry> polynomial_roots(const std::vector<Scalar>& coeffs) {
  if (coeffs.size() < 2) fail(errc::invalid_argument, "polynomial degree must be at least 1");
  if (coeffs.back().is_zero()) fail(errc::invalid_argument, "leading coefficient must be nonzero");
  const int n = int(coeffs.size()) - 1;

  std::vector<RootEntry> raw;
  bool exact = std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.exact(); });
  if (exact) {
    PolyQ p;
    for (const Scalar& c : coeffs) p.push_back(c.rat());
    for (auto& [factor, mult] : square_free(std::move(p))) {
      std::vector<double> fd;
      for (const Rational& c : factor) fd.push_back(c.convert_to<double>());
      for (auto r : roots_of_monic_double(fd)) raw.push_back(RootEntry{r, mult});
    }
  } else {
    std::vector<double> fd;
    double lead = coeffs.back().as_double();
    for (const Scalar& c : coeffs) fd.push_back(c.as_double() / lead);
    for (auto r : roots_of_monic_double(fd)) raw.push_back(RootEntry{r, 1});
  }

  // Cluster nearly equal roots; representative is the multiplicity-weighted mean.
  std::vector<RootEntry> clustered;
  for (const RootEntry& e : raw) {
    bool merged = false;
    for (RootEntry& c : clustered) {
      double tol = 1e-8 * std::max(1.0, std::abs(c.value));
      if (std::abs(c.value - e.value) <= tol) {
        c.value = (c.value * double(c.multiplicity) + e.value * double(e.multiplicity)) /
                  double(c.multiplicity + e.multiplicity);
        c.multiplicity += e.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) clustered.push_back(e);
  }

  // Real coefficients: snap near-real roots and enforce conjugate pairing.
  std::vector<RootEntry> out;
  std::vector<RootEntry> complex_pos, complex_neg;
  for (RootEntry& e : clustered) {
    double tol = 1e-8 * std::max(1.0, std::abs(e.value));
    if (std::fabs(e.value.imag()) <= tol) {
      e.value = std::complex<double>(e.value.real(), 0.0);
      out.push_back(e);
    } else if (e.value.imag() > 0) {
      complex_pos.push_back(e);
    } else {
      complex_neg.push_back(e);
    }
  }
  auto by_re = [](const RootEntry& a, const RootEntry& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return std::fabs(a.value.imag()) < std::fabs(b.value.imag());
  };
  std::sort(complex_pos.begin(), complex_pos.end(), by_re);
  std::sort(complex_neg.begin(), complex_neg.end(), by_re);
  if (complex_pos.size() != complex_neg.size())
    fail(errc::internal, "conjugate pairing failed for a real-coefficient polynomial");
  for (size_t k = 0; k < complex_pos.size(); ++k) {
    const RootEntry& p = complex_pos[k];
    const RootEntry& q = complex_neg[k];
    if (p.multiplicity != q.multiplicity)
      fail(errc::internal, "conjugate multiplicities disagree");
    double re = 0.5 * (p.value.real() + q.value.real());
    double im = 0.5 * (p.value.imag() - q.value.imag());
    out.push_back(RootEntry{{re, im}, p.multiplicity});
    out.push_back(RootEntry{{re, -im}, p.multiplicity});
  }

  int total = 0;
  for (const RootEntry& e : out) total += e.multiplicity;
  if (total != n) fail(errc::internal, "root multiplicities do not sum to the degree");

  std::sort(out.begin(), out.end(), [](const RootEntry& a, const RootEntry& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace classica
