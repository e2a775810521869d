#include "classica/linear_const.hpp"

#include <algorithm>
#include <cmath>

namespace classica {

RootSet characteristic_roots(const std::vector<Scalar>& coeffs) {
  if (coeffs.size() < 2) fail(errc::invalid_argument, "equation order must be at least 1");
  return polynomial_roots(coeffs);
}

double cf_term_eval(const CfTerm& term, double x, int deriv) {
  // r-th derivative of x^d e^(gamma x) with gamma = rate + i*freq, by the
  // Leibniz rule; cos and sin terms are the real and imaginary parts.
  std::complex<double> gamma(term.exp_rate, term.trig_freq);
  std::complex<double> sum(0.0, 0.0);
  double binom = 1.0;  // C(r, j)
  double fall = 1.0;   // d! / (d - j)!
  int jmax = std::min(deriv, term.degree);
  std::vector<double> xpow(size_t(term.degree) + 1, 1.0);
  for (int p = 1; p <= term.degree; ++p) xpow[size_t(p)] = xpow[size_t(p - 1)] * x;
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) {
      binom = binom * double(deriv - j + 1) / double(j);
      fall *= double(term.degree - j + 1);
    }
    std::complex<double> gp(1.0, 0.0);
    for (int e = 0; e < deriv - j; ++e) gp *= gamma;
    sum += binom * fall * xpow[size_t(term.degree - j)] * gp;
  }
  std::complex<double> value = sum * std::exp(std::complex<double>(term.exp_rate * x, term.trig_freq * x));
  switch (term.kind) {
    case TrigKind::none:
    case TrigKind::cosine: return value.real();
    case TrigKind::sine: return value.imag();
  }
  return 0.0;
}

double ClosedFormSolution::eval(double x, int deriv) const {
  if (!determined()) fail(errc::invalid_argument, "solution constants are not determined");
  double acc = 0.0;
  for (size_t k = 0; k < terms.size(); ++k) acc += constants[k] * cf_term_eval(terms[k], x, deriv);
  Polynomial d = particular;
  for (int r = 0; r < deriv; ++r) d = d.derivative();
  return acc + d.eval(x);
}

ClosedFormSolution complementary_function(const RootSet& roots) {
  ClosedFormSolution out;
  int index = 0;
  for (const RootEntry& r : roots) {
    if (r.value.imag() < 0.0) continue;  // conjugate partner of an emitted pair
    if (r.value.imag() == 0.0) {
      for (int j = 0; j < r.multiplicity; ++j)
        out.terms.push_back(CfTerm{index++, j, r.value.real(), 0.0, TrigKind::none});
    } else {
      for (int j = 0; j < r.multiplicity; ++j) {
        out.terms.push_back(CfTerm{index++, j, r.value.real(), r.value.imag(), TrigKind::cosine});
        out.terms.push_back(CfTerm{index++, j, r.value.real(), r.value.imag(), TrigKind::sine});
      }
    }
  }
  return out;
}

Polynomial particular_integral_poly(const std::vector<Scalar>& coeffs, const Polynomial& forcing) {
  if (coeffs.size() < 2 || coeffs.back().is_zero())
    fail(errc::invalid_argument, "equation order must be at least 1 with nonzero leading coefficient");
  if (forcing.is_zero()) return Polynomial::zero();

  size_t m = 0;
  while (m < coeffs.size() && coeffs[m].is_zero()) ++m;
  std::vector<Scalar> q(coeffs.begin() + long(m), coeffs.end());
  const Scalar& q0 = q[0];

  // 1/Q(D) acting on the forcing: u_0 = X/q0, u_{i+1} = -(R u_i)/q0 with
  // R(D) = Q(D) - q0; degree-d input dies after d+1 terms.
  auto apply_r = [&](const Polynomial& u) {
    Polynomial acc;
    Polynomial d = u;
    for (size_t k = 1; k < q.size(); ++k) {
      d = d.derivative();
      if (d.is_zero()) break;
      acc = acc + d.scaled(q[k]);
    }
    return acc;
  };
  Polynomial term = forcing.scaled(Scalar(1) / q0);
  Polynomial sum = term;
  for (int i = 0; i <= forcing.degree(); ++i) {
    term = apply_r(term).scaled(Scalar(-1) / q0);
    if (term.is_zero()) break;
    sum = sum + term;
  }

  for (size_t i = 0; i < m; ++i) sum = sum.antiderivative();
  return sum;
}

Polynomial particular_integral(const ConstCoeffProblem& problem) {
  if (!problem.forcing.is_polynomial())
    fail(errc::nonpoly_forcing,
         "operator inversion of non-polynomial forcing '" + problem.forcing.name() +
             "' is rejected: the formal expansion of 1/P(D) produces a divergent series "
             "(see divergent_pi_demo); use a numeric integrator instead");
  return particular_integral_poly(problem.coeffs, problem.forcing.poly());
}

ClosedFormSolution solve_ivp_constants(const ClosedFormSolution& general, double x0,
                                       const std::vector<double>& values) {
  const size_t n = general.terms.size();
  if (values.size() != n)
    fail(errc::invalid_argument, "need exactly n initial values for an order-n equation");

  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  Polynomial d = general.particular;
  for (size_t r = 0; r < n; ++r) {
    for (size_t k = 0; k < n; ++k) a[r][k] = cf_term_eval(general.terms[k], x0, int(r));
    a[r][n] = values[r] - d.eval(x0);
    d = d.derivative();
  }

  // Gaussian elimination with partial pivoting.
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-12)
      fail(errc::singular_system, "initial-value system is singular; basis is inconsistent");
    std::swap(a[col], a[piv]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      for (size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }

  ClosedFormSolution out = general;
  out.constants.assign(n, 0.0);
  for (size_t k = 0; k < n; ++k) out.constants[k] = a[k][n] / a[k][k];
  return out;
}

std::complex<double> ReducedFirstOrder::q_eval(double t) const {
  std::complex<double> acc(0.0, 0.0);
  for (size_t k = q.size(); k-- > 0;) acc = acc * t + q[k];
  return acc;
}

std::complex<double> ReducedFirstOrder::g(double x) const {
  return q_eval(x) - std::exp(-alpha * (x - x0)) * q_eval(x0);
}

std::complex<double> ReducedFirstOrder::matched_lhs(double x, double y_at_x0, double yp_at_x0) const {
  std::complex<double> r0 = -alpha * y_at_x0 + yp_at_x0;
  return g(x) + std::exp(-alpha * (x - x0)) * r0;
}

ReducedFirstOrder reduce_order_exponential(double k, const Polynomial& forcing, double x0) {
  if (k == 0.0) fail(errc::domain, "k must be nonzero; alpha^2 = -k degenerates");
  ReducedFirstOrder out;
  out.alpha = (k < 0.0) ? std::complex<double>(std::sqrt(-k), 0.0) : std::complex<double>(0.0, std::sqrt(k));
  out.x0 = x0;

  // integral of e^(alpha t) t^j dt = e^(alpha t) * sum_{i=0}^{j} (-1)^i
  // (j!/(j-i)!) t^(j-i) / alpha^(i+1), assembled per forcing coefficient.
  int d = std::max(forcing.degree(), 0);
  out.q.assign(size_t(d) + 1, std::complex<double>(0.0, 0.0));
  for (int j = 0; j <= forcing.degree(); ++j) {
    double bj = forcing.coeff(j).as_double();
    if (bj == 0.0) continue;
    double fall = 1.0;
    std::complex<double> apow = out.alpha;
    for (int i = 0; i <= j; ++i) {
      if (i > 0) {
        fall *= double(j - i + 1);
        apow *= out.alpha;
      }
      double sign = (i % 2 == 0) ? 1.0 : -1.0;
      out.q[size_t(j - i)] += bj * sign * fall / apow;
    }
  }
  return out;
}

DivergenceDemo divergent_pi_demo(double x, int n_max) {
  if (x == 0.0) fail(errc::domain, "x must be nonzero");
  if (n_max < 1) fail(errc::invalid_argument, "n_max must be at least 1");
  DivergenceDemo out;
  out.terms.reserve(size_t(n_max));
  out.partial_sums.reserve(size_t(n_max));
  double term = 1.0 / x;  // n = 0
  double sum = 0.0;
  for (int n = 0; n < n_max; ++n) {
    if (!std::isfinite(term))
      fail(errc::nonfinite, "term magnitude exceeded double range at n = " + std::to_string(n));
    out.terms.push_back(term);
    sum += term;
    out.partial_sums.push_back(sum);
    term *= double(n + 1) / x;
  }
  out.min_term_index = int(std::min_element(out.terms.begin(), out.terms.end(),
                                            [](double a, double b) { return std::fabs(a) < std::fabs(b); }) -
                           out.terms.begin());
  return out;
}

}  // namespace classica
