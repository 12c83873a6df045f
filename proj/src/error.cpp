#include "pisot/error.hpp"

namespace pisot {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_substitution: return "NotSubstitution";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::negative_entry: return "NegativeEntry";
    case ErrorCode::not_primitive: return "NotPrimitive";
    case ErrorCode::not_unimodular: return "NotUnimodular";
    case ErrorCode::not_irreducible: return "NotIrreducible";
    case ErrorCode::not_pisot: return "NotPisot";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::no_seed: return "NoSeed";
    case ErrorCode::negative_letter: return "NegativeLetter";
    case ErrorCode::not_closed: return "NotClosed";
    case ErrorCode::bad_inverse: return "BadInverse";
    case ErrorCode::not_eigen: return "NotEigen";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::missing_rule: return "MissingRule";
    case ErrorCode::duplicate_rule: return "DuplicateRule";
    case ErrorCode::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace pisot
