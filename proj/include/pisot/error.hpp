#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pisot {

enum class ErrorCode {
  invalid_argument,
  not_substitution,
  not_invertible,
  negative_entry,
  not_primitive,
  not_unimodular,
  not_irreducible,
  not_pisot,
  division_by_zero,
  no_seed,
  negative_letter,
  not_closed,
  bad_inverse,
  not_eigen,
  parse_error,
  missing_rule,
  duplicate_rule,
  io_error,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pisot
