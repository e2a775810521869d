#pragma once

#include <stdexcept>
#include <string>

namespace classica {

// Error codes shared with the C API (values mirror classica_status in
// include/classica/classica.h).
enum class errc : int {
  ok = 0,
  invalid_argument = 1,
  domain = 2,
  parse = 3,
  center_mismatch = 4,
  grid_mismatch = 5,
  nonpoly_forcing = 6,
  singular_system = 7,
  not_converged = 8,
  nonfinite = 9,
  turning_point = 10,
  not_bracketed = 11,
  internal = 12,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace classica
