#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "classica/error.hpp"

namespace classica {

/// One classic fourth-order Runge-Kutta step for an N-dimensional field.
template <size_t N>
std::array<double, N> rk4_step(const std::function<std::array<double, N>(double, const std::array<double, N>&)>& f,
                               double t, const std::array<double, N>& y, double h) {
  auto k1 = f(t, y);
  std::array<double, N> tmp;
  for (size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  auto k2 = f(t + 0.5 * h, tmp);
  for (size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  auto k3 = f(t + 0.5 * h, tmp);
  for (size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * k3[i];
  auto k4 = f(t + h, tmp);
  std::array<double, N> out;
  for (size_t i = 0; i < N; ++i) out[i] = y[i] + (h / 6.0) * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

/// Integrates y' = f(t, y) from t0 to t1 with steps of size at most h
/// (the actual step is (t1-t0)/n for the smallest n that keeps |step| <= h,
/// so the grid is uniform). Throws on non-finite state.
template <size_t N>
std::array<double, N> rk4_integrate(const std::function<std::array<double, N>(double, const std::array<double, N>&)>& f,
                                    double t0, std::array<double, N> y, double t1, double h) {
  if (!(h > 0)) fail(errc::invalid_argument, "step size must be positive");
  if (t1 == t0) return y;
  double span = t1 - t0;
  long long n = std::llround(std::ceil(std::fabs(span) / h - 1e-12));
  if (n < 1) n = 1;
  double step = span / double(n);
  double t = t0;
  for (long long i = 0; i < n; ++i) {
    y = rk4_step<N>(f, t, y, step);
    t = t0 + double(i + 1) * step;
    for (double v : y)
      if (!std::isfinite(v)) fail(errc::nonfinite, "integration produced a non-finite state");
  }
  return y;
}

}  // namespace classica
