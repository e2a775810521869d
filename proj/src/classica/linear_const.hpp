#pragma once

#include <complex>
#include <string>
#include <vector>

#include "classica/polynomial.hpp"
#include "classica/roots.hpp"

namespace classica {

using RootSet = std::vector<RootEntry>;

/// Right-hand side of a constant-coefficient linear ODE. Only polynomial
/// forcing is solvable on the operator path; named non-polynomial forcing
/// ("1/x", "exp(x)", ...) exists so that the rejection is an explicit,
/// testable contract rather than a parse accident.
class Forcing {
public:
  static Forcing polynomial(Polynomial p) {
    Forcing f;
    f.poly_ = std::move(p);
    f.is_poly_ = true;
    return f;
  }
  static Forcing named(std::string expr) {
    Forcing f;
    f.name_ = std::move(expr);
    f.is_poly_ = false;
    return f;
  }

  bool is_polynomial() const { return is_poly_; }
  const Polynomial& poly() const { return poly_; }
  const std::string& name() const { return name_; }

private:
  Polynomial poly_;
  std::string name_;
  bool is_poly_ = true;
};

/// a_k multiplies the k-th derivative; the leading coefficient must be
/// nonzero and the order at least 1.
struct ConstCoeffProblem {
  std::vector<Scalar> coeffs;
  Forcing forcing = Forcing::polynomial(Polynomial::zero());
};

enum class TrigKind { none, cosine, sine };

/// One basis term c_k * x^degree * e^(rate*x) * {1 | cos(freq*x) | sin(freq*x)}.
struct CfTerm {
  int index = 0;  // which free constant this term carries
  int degree = 0;
  double exp_rate = 0.0;
  double trig_freq = 0.0;
  TrigKind kind = TrigKind::none;
};

/// Value of the r-th derivative of the bare basis term at x.
double cf_term_eval(const CfTerm& term, double x, int deriv = 0);

/// Complementary function plus an optional fixed particular polynomial.
/// `constants` stays empty until an initial value problem pins them down.
struct ClosedFormSolution {
  std::vector<CfTerm> terms;
  Polynomial particular;
  std::vector<double> constants;

  bool determined() const { return constants.size() == terms.size() && !terms.empty(); }
  double eval(double x, int deriv = 0) const;
};

/// All n complex roots of a_0 + a_1 z + ... + a_n z^n with multiplicities.
RootSet characteristic_roots(const std::vector<Scalar>& coeffs);

/// Real-form homogeneous basis: x^j e^(ax) for real roots, and
/// e^(ax) x^j cos(bx) / sin(bx) pairs for conjugate pairs; j runs to
/// multiplicity - 1, so the number of free constants equals the order.
ClosedFormSolution complementary_function(const RootSet& roots);

/// Polynomial particular integral via the terminating expansion of 1/P(D):
/// factor P(D) = D^m Q(D) with Q(0) != 0, expand 1/Q(D) as a finite Neumann
/// series on the forcing (D^(d+1) annihilates degree-d polynomials), then
/// antidifferentiate m times with zero constants. Exact in rational mode.
Polynomial particular_integral_poly(const std::vector<Scalar>& coeffs, const Polynomial& forcing);

/// Same, but honoring the Forcing contract: non-polynomial forcing is
/// rejected with errc::nonpoly_forcing.
Polynomial particular_integral(const ConstCoeffProblem& problem);

/// Determines the free constants from y(x0), y'(x0), ..., y^(n-1)(x0).
ClosedFormSolution solve_ivp_constants(const ClosedFormSolution& general, double x0,
                                       const std::vector<double>& values);

/// Order reduction of y'' + k y = X via the exponential integrating factor:
/// alpha^2 = -k and, along any solution, e^(-alpha x) * (integral of
/// e^(alpha t) X(t) dt from x0, plus the matching constant) equals
/// y' - alpha y. The closed form of the integral is e^(alpha t) Q(t) with Q
/// built by repeated integration by parts.
struct ReducedFirstOrder {
  std::complex<double> alpha;
  std::vector<std::complex<double>> q;  // ascending coefficients of Q
  double x0 = 0.0;

  std::complex<double> q_eval(double t) const;
  /// g(x) = e^(-alpha x) * integral_{x0}^{x} e^(alpha t) X(t) dt, closed form.
  std::complex<double> g(double x) const;
  /// g plus the constant matched to a solution with data (y(x0), y'(x0)).
  std::complex<double> matched_lhs(double x, double y_at_x0, double yp_at_x0) const;
};

ReducedFirstOrder reduce_order_exponential(double k, const Polynomial& forcing, double x0);

/// The first n_max terms and partial sums of sum n!/x^(n+1), plus the index
/// of the smallest term. The series diverges for every x; this returns the
/// evidence and never a "solution".
struct DivergenceDemo {
  std::vector<double> terms;
  std::vector<double> partial_sums;
  int min_term_index = 0;
};

DivergenceDemo divergent_pi_demo(double x, int n_max);

}  // namespace classica
