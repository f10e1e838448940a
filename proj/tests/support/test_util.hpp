#pragma once

#include <string_view>
#include <vector>

#include "simperm/format.hpp"
#include "simperm/permutation.hpp"

namespace testutil {

inline simperm::Permutation P(std::vector<int> images) {
  return simperm::Permutation::from_images(std::move(images));
}

inline simperm::Permutation P(std::string_view text) { return simperm::parse_permutation(text); }

inline simperm::CycleForm C(std::vector<int> elements) { return simperm::CycleForm(std::move(elements)); }

inline std::vector<int> images_of(const simperm::Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

}  // namespace testutil

#define CHECK_ERROR_CODE(expr, expected)               \
  do {                                                 \
    try {                                              \
      (void)(expr);                                    \
      FAIL("no exception from " #expr);                \
    } catch (const simperm::Error& e_) {               \
      CHECK(e_.code() == simperm::ErrorCode::expected); \
    }                                                  \
  } while (false)
