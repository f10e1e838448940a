#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simperm {

enum class ErrorCode {
  kNotABijection,
  kOutOfRange,
  kDegreeMismatch,
  kNotInvariant,
  kNotCanonical,
  kNotDisjoint,
  kBadOrdering,
  kBadIndex,
  kNotDivisible,
  kBadDegree,
  kOddDegree,
  kDegreeTooSmall,
  kNotACycle,
  kDegenerateLoop,
  kChaseFailure,
  kTooLarge,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Every precondition failure in the library surfaces as this exception. The
// code distinguishes bad input from internal inconsistency (kDegenerateLoop,
// kChaseFailure).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simperm
