#pragma once

#include <stdexcept>
#include <string>

namespace kcheeger {

enum class ErrorCode {
  degenerate_input,
  non_finite,
  bad_parameter,
  zero_direction,
  origin_not_interior,
  negative_rho,
  out_of_range,
  no_bracket,
  tolerance_not_met,
  params_degenerate,
  parse_error,
  validation_error,
};

inline const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::bad_parameter: return "bad_parameter";
    case ErrorCode::zero_direction: return "zero_direction";
    case ErrorCode::origin_not_interior: return "origin_not_interior";
    case ErrorCode::negative_rho: return "negative_rho";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::no_bracket: return "no_bracket";
    case ErrorCode::tolerance_not_met: return "tolerance_not_met";
    case ErrorCode::params_degenerate: return "params_degenerate";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::validation_error: return "validation_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kcheeger
