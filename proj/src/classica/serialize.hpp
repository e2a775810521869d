#pragma once

#include <string>
#include <vector>

#include "classica/polynomial.hpp"
#include "classica/series.hpp"

namespace classica {

// JSON forms:
//   series: {"center": r, "coeffs": [c0, ..., cN]}
//   bivariate polynomial: [{"i": 0, "j": 1, "c": 2}, ...]
// A coefficient is a JSON number (floating) or a "p/q" string (exact);
// integer JSON numbers are treated as exact.

TruncatedSeries series_from_json(const std::string& text);
std::string series_to_json(const TruncatedSeries& s);
std::string series_coeffs_json(const TruncatedSeries& s);  // just the array

BivariatePolynomial bipoly_from_json(const std::string& text);
std::string bipoly_to_json(const BivariatePolynomial& p);

/// Comma-separated ascending coefficient list; each entry an integer,
/// "p/q" rational, or decimal literal. Errors carry the 1-based entry
/// position.
std::vector<Scalar> parse_scalar_csv(const std::string& text);
Polynomial poly_from_csv(const std::string& text);
std::string scalars_json(const std::vector<Scalar>& v);

/// One scalar as a JSON fragment ("p/q" string or %.17g number).
std::string scalar_json(const Scalar& s);

}  // namespace classica
