#include "classica/newton.hpp"

#include "classica/rk4.hpp"

namespace classica {

TruncatedSeries solve_series_ivp(const SeriesIvp& problem) {
  if (problem.order < 1) fail(errc::invalid_argument, "series order must be at least 1");
  const int n = problem.order;
  bool exact = problem.y0.exact() && problem.f.exact();
  Scalar y0 = exact ? problem.y0 : problem.y0.demoted();
  TruncatedSeries y = TruncatedSeries::constant(problem.x0, y0, n);
  for (int iter = 0; iter <= n; ++iter) {
    TruncatedSeries rhs = substitute_series(problem.f, y);
    y = series_antiderivative(rhs, y0).truncated(n);
  }
  return y;
}

TruncatedSeries residual_of_series(const BivariatePolynomial& f, const TruncatedSeries& y) {
  TruncatedSeries yp = series_differentiate(y);
  TruncatedSeries fy = substitute_series(f, y).truncated(y.order() - 1);
  return series_linear_combine(Scalar(1), yp, Scalar(-1), fy);
}

CrossValidation cross_validate_rk4(const SeriesIvp& problem, double x_eval, double dt) {
  TruncatedSeries series = solve_series_ivp(problem);
  double sv = series_eval(series, x_eval);
  const BivariatePolynomial& f = problem.f;
  auto field = std::function<std::array<double, 1>(double, const std::array<double, 1>&)>(
      [&f](double x, const std::array<double, 1>& y) { return std::array<double, 1>{f.eval(x, y[0])}; });
  std::array<double, 1> y{problem.y0.as_double()};
  y = rk4_integrate<1>(field, problem.x0, y, x_eval, dt);
  return CrossValidation{sv, y[0], std::fabs(sv - y[0])};
}

}  // namespace classica
