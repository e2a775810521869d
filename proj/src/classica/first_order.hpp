#pragma once

#include <optional>
#include <utility>

#include "classica/quadrature.hpp"
#include "classica/series.hpp"

namespace classica {

/// g(y) dy = f(x) dx with both sides finite on their stated intervals.
struct SeparableOde {
  RealFn f;
  RealFn g;
};

/// The form M dx + N dy = 0 with polynomial M, N.
struct DifferentialForm {
  BivariatePolynomial m;
  BivariatePolynomial n;
};

/// Solves g(y) dy = f(x) dx through (x0, y0) and evaluates at x_target:
/// finds y with integral_{y0}^{y} g = integral_{x0}^{x_target} f by an
/// expanding bracket from y0 followed by bisection to 1e-13. A sign change
/// of g on the traversed interval (turning point) is an error, as is a
/// bracket that never closes.
double solve_separable(const SeparableOde& ode, double x0, double y0, double x_target, double tol);

/// y' + p(x) y = q(x) by the exponential integrating factor, all integrals
/// by adaptive quadrature.
double solve_linear_first_order(const RealFn& p, const RealFn& q, double x0, double y0,
                                double x_target, double tol);

/// True iff x^alpha y^beta makes M dx + N dy exact, checked as a formal
/// polynomial identity after clearing the common monomial.
bool exactness_check(const DifferentialForm& form, int alpha, int beta);

/// Searches integer exponents with max(|alpha|, |beta|) <= range for a
/// monomial integrating factor, skipping factors that merely separate the
/// variables (both shifted partials identically zero). Shells of growing
/// Chebyshev norm are scanned in lexicographic orderically; the first hit wins.
std::optional<std::pair<int, int>> find_monomial_integrating_factor(const DifferentialForm& form,
                                                                    int range);

/// Elastica deflection integral y(x) = integral_0^x t^2 / sqrt(a^4 - t^4) dt
/// for |x| < a; the integrand is singular at |t| = a, so evaluation close to
/// the endpoint splits the tail geometrically.
double elastica_quadrature(double a, double x, double tol);

/// Named separable presets used by the CLI.
SeparableOde separable_preset(const std::string& name, double a, double b);

}  // namespace classica
