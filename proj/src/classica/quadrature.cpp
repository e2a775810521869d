#include "classica/quadrature.hpp"

#include <cmath>

namespace classica {

namespace {

// Kronrod-15 abscissae on [0, 1] side (symmetric), with the embedded
// Gauss-7 rule on the odd-indexed nodes.
const double kron_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
const double kron_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
const double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Estimate {
  double value;
  double error;
};

Estimate gk15(const RealFn& f, double a, double b) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double fk = 0.0, fg = 0.0;
  for (int i = 0; i < 8; ++i) {
    double x = kron_x[i] * h;
    double v = (i == 7) ? f(c) : f(c - x) + f(c + x);
    fk += kron_w[i] * v;
    if (i % 2 == 1) fg += gauss_w[i / 2] * v;
  }
  double value = fk * h;
  double err = std::fabs((fk - fg) * h);
  return Estimate{value, err};
}

double recurse(const RealFn& f, double a, double b, double tol, int depth, int max_depth) {
  Estimate e = gk15(f, a, b);
  if (!std::isfinite(e.value)) fail(errc::nonfinite, "integrand evaluated to a non-finite value");
  if (e.error <= tol || depth >= max_depth) return e.value;
  double c = 0.5 * (a + b);
  return recurse(f, a, c, 0.5 * tol, depth + 1, max_depth) +
         recurse(f, c, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const RealFn& f, double a, double b, double abs_tol, int max_depth) {
  if (!(abs_tol > 0)) fail(errc::invalid_argument, "tolerance must be positive");
  if (a == b) return 0.0;
  return recurse(f, a, b, abs_tol, 0, max_depth);
}

}  // namespace classica
