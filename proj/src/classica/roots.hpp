#pragma once

#include <complex>
#include <vector>

#include "classica/scalar.hpp"

namespace classica {

struct RootEntry {
  std::complex<double> value;
  int multiplicity = 1;
};

/// Roots of a polynomial with real coefficients (ascending order, leading
/// coefficient nonzero), with multiplicities. Non-real roots come in
/// conjugate pairs with equal multiplicity; entries are sorted by
/// (real part, imaginary part).
///
/// Exact (rational) coefficients first go through a square-free
/// decomposition, so repeated roots get their multiplicity from exact
/// arithmetic and the numeric stage only ever sees simple roots. Floating
/// coefficients fall back to clustering with tolerance
/// 1e-8 * max(1, |root|).
std::vector<RootEntry> polynomial_roots(const std::vector<Scalar>& coeffs);

/// Durand-Kerner simultaneous iteration on a monic polynomial given by its
/// ascending coefficients (excluding the leading 1). Deterministic.
std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& monic_tail);

}  // namespace classica
