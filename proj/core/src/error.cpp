#include "simperm/error.hpp"

namespace simperm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotABijection: return "NotABijection";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kNotInvariant: return "NotInvariant";
    case ErrorCode::kNotCanonical: return "NotCanonical";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kBadOrdering: return "BadOrdering";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kBadDegree: return "BadDegree";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kDegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kDegenerateLoop: return "DegenerateLoop";
    case ErrorCode::kChaseFailure: return "ChaseFailure";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace simperm
