#pragma once

#include "classica/series.hpp"

namespace classica {

/// First-order initial value problem y' = f(x, y) with polynomial right-hand
/// side, to be solved as a truncated power series about x0.
struct SeriesIvp {
  BivariatePolynomial f;
  double x0 = 0.0;
  Scalar y0 = Scalar(0);
  int order = 16;
};

/// Degree-N Taylor polynomial of the solution about x0, computed by
/// order-truncated Picard iteration y <- y0 + integral of f(x, y). The
/// iteration runs order+1 times; coefficient k is stable after k rounds, so
/// the result is the fixed point.
TruncatedSeries solve_series_ivp(const SeriesIvp& problem);

/// Series of y' - f(x, y), valid through order y.order - 1. Exactly zero in
/// rational mode when y solves the problem.
TruncatedSeries residual_of_series(const BivariatePolynomial& f, const TruncatedSeries& y);

struct CrossValidation {
  double series_value;
  double rk4_value;
  double gap;
};

/// Evaluates the truncated series and an independent RK4 integration of the
/// same problem at x_eval and reports both with their absolute difference.
CrossValidation cross_validate_rk4(const SeriesIvp& problem, double x_eval, double dt);

}  // namespace classica
