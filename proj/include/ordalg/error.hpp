#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordalg {

enum class ErrorCode {
  duplicate_label,
  unknown_label,
  cycle_detected,
  size_limit,
  no_bottom,
  not_a_partial_order,
  missing_symbol,
  unbound_variable,
  unknown_symbol,
  arity_mismatch,
  budget_exceeded,
  missing_structure,
  missing_choice,
  bad_choice,
  not_directed,
  bad_partition,
  not_a_congruence,
  size_guard_exceeded,
  signature_mismatch,
  non_total_table,
  syntax_error,
  semantic_error,
  invalid_argument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` lets callers
// (the CLI in particular) map failures without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ordalg
