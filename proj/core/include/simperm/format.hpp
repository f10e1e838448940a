#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simperm/permutation.hpp"

namespace simperm {

// Text forms shared by the CLI and the tests:
//   one-line  "6,4,5,1,2,3"         (canonical serialization, no spaces)
//   cycles    "(1,6,3,5,2,4)(7)"    (disjoint cycles; degree = largest element)
// Whitespace is ignored on input. Errors throw Error(kParse) or the
// validation error of the underlying constructor.
Permutation parse_permutation(std::string_view text);
CycleForm parse_cycle(std::string_view text);

std::string to_string(const Permutation& p);
std::string to_string(const CycleForm& c);
// All cycles including fixed points, e.g. "(1,3)(2,4)".
std::string to_cycle_string(const Permutation& p);

}  // namespace simperm
