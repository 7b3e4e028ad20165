#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sno {

enum class ErrorCode {
  backend_mismatch,
  order_precondition_failed,
  division_by_zero,
  dimension_mismatch,
  index_error,
  not_majorized,
  invalid_partition,
  not_dominated,
  empty_spec,
  spectrum_mismatch,
  rank_ambiguous,
  singular_transform,
  derivative_order_exceeded,
  outside_analyticity_radius,
  kappa_not_found,
  incomparable_nilpotent,
  gradient_unavailable,
  not_weakly_majorized,
  not_sn_ordered,
  contraction_violated,
  not_a_projection,
  spectrum_unavailable,
  schema_violation,
};

// Stable CamelCase name, used in JSON error objects.
std::string_view error_name(ErrorCode code);

// Input errors are the caller's fault; the rest come from the numeric backend.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sno
