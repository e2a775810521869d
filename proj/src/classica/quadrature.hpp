#pragma once

#include <functional>

#include "classica/error.hpp"

namespace classica {

using RealFn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7-15) quadrature with absolute tolerance.
/// Subdivision bisects the worst interval, which refines geometrically
/// toward difficult endpoints.
double integrate(const RealFn& f, double a, double b, double abs_tol, int max_depth = 52);

}  // namespace classica
