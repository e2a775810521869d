#include "classica/serialize.hpp"

#include <cmath>
#include <cstdlib>
#include <json.hpp>

#include "classica/json_writer.hpp"

namespace classica {

using nlohmann::json;

static Scalar scalar_from_json(const json& v) {
  if (v.is_string()) return Scalar(parse_rational(v.get<std::string>()));
  if (v.is_number_integer()) return Scalar(static_cast<long long>(v.get<int64_t>()));
  if (v.is_number()) return Scalar::real(v.get<double>());
  fail(errc::parse, "coefficient must be a number or a \"p/q\" string");
}

static json parse_or_fail(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse, std::string("malformed JSON for ") + what);
  return j;
}

TruncatedSeries series_from_json(const std::string& text) {
  json j = parse_or_fail(text, "series");
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail(errc::parse, "series JSON must be {\"center\": r, \"coeffs\": [...]}");
  double center = j.value("center", 0.0);
  std::vector<Scalar> coeffs;
  for (const auto& v : j["coeffs"]) coeffs.push_back(scalar_from_json(v));
  if (coeffs.empty()) fail(errc::parse, "series JSON has an empty coefficient list");
  return TruncatedSeries(center, std::move(coeffs));
}

std::string scalar_json(const Scalar& s) {
  if (s.exact()) return "\"" + s.str() + "\"";
  JsonWriter w;
  w.number(s.as_double());
  return w.str();
}

std::string series_coeffs_json(const TruncatedSeries& s) {
  std::string out = "[";
  for (int k = 0; k <= s.order(); ++k) {
    if (k) out += ",";
    out += scalar_json(s.coeff(k));
  }
  out += "]";
  return out;
}

std::string series_to_json(const TruncatedSeries& s) {
  JsonWriter w;
  w.raw("{").key("center").number(s.center()).raw(",").key("coeffs").raw(series_coeffs_json(s)).raw("}");
  return w.str();
}

BivariatePolynomial bipoly_from_json(const std::string& text) {
  json j = parse_or_fail(text, "bivariate polynomial");
  if (!j.is_array()) fail(errc::parse, "bivariate polynomial JSON must be a list of {\"i\",\"j\",\"c\"} terms");
  BivariatePolynomial p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("c"))
      fail(errc::parse, "bivariate polynomial term needs \"i\", \"j\" and \"c\"");
    int i = t["i"].get<int>();
    int jj = t["j"].get<int>();
    if (i < 0 || jj < 0) fail(errc::parse, "bivariate polynomial exponents must be nonnegative");
    p.add_term(i, jj, scalar_from_json(t["c"]));
  }
  return p;
}

std::string bipoly_to_json(const BivariatePolynomial& p) {
  std::string out = "[";
  bool first = true;
  for (const auto& [ij, c] : p.terms()) {
    if (!first) out += ",";
    first = false;
    JsonWriter w;
    w.raw("{").key("i").integer(ij.first).raw(",").key("j").integer(ij.second).raw(",").key("c");
    out += w.str() + scalar_json(c) + "}";
  }
  out += "]";
  return out;
}

std::vector<Scalar> parse_scalar_csv(const std::string& text) {
  std::vector<Scalar> out;
  size_t pos = 0;
  int index = 1;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // trim spaces
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    tok = (b == std::string::npos) ? "" : tok.substr(b, e - b + 1);
    if (tok.empty()) fail(errc::parse, "empty entry at position " + std::to_string(index));
    bool rational_like = tok.find_first_of(".eE") == std::string::npos;
    if (tok.find('/') != std::string::npos || (rational_like && tok.find_first_not_of("+-0123456789") == std::string::npos)) {
      try {
        out.push_back(Scalar(parse_rational(tok)));
      } catch (const Error&) {
        fail(errc::parse, "bad numeric entry '" + tok + "' at position " + std::to_string(index));
      }
    } else {
      char* end = nullptr;
      double v = std::strtod(tok.c_str(), &end);
      if (!end || *end != '\0' || !std::isfinite(v))
        fail(errc::parse, "bad numeric entry '" + tok + "' at position " + std::to_string(index));
      out.push_back(Scalar::real(v));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
    ++index;
  }
  return out;
}

Polynomial poly_from_csv(const std::string& text) { return Polynomial(parse_scalar_csv(text)); }

std::string scalars_json(const std::vector<Scalar>& v) {
  std::string out = "[";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += scalar_json(v[k]);
  }
  out += "]";
  return out;
}

}  // namespace classica
