#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simperm/permutation.hpp"

namespace simperm {

enum class StefanVariant { kAlpha, kBeta };

std::string to_string(StefanVariant v);

// Outcome of the three-way simplicity test on a permutation.
struct SimplicityClass {
  enum class Tag { kOddSimple, kPow2Simple, kMixedSimple, kNotSimple, kNotFullCycle };

  Tag tag = Tag::kNotSimple;
  std::optional<StefanVariant> variant;  // kOddSimple only
  int s = 0;                             // kMixedSimple: dyadic exponent (s >= 1)
  int q = 0;                             // kMixedSimple: odd part (q >= 3)

  bool is_simple() const noexcept {
    return tag == Tag::kOddSimple || tag == Tag::kPow2Simple || tag == Tag::kMixedSimple;
  }

  friend bool operator==(const SimplicityClass&, const SimplicityClass&) = default;
};

// "OddSimple alpha", "Pow2Simple", "MixedSimple s=1 q=3", "NotSimple", "NotFullCycle".
std::string to_string(const SimplicityClass& c);

// i-th of m consecutive blocks of size total/m: {(i-1)n+1, ..., in}.
// Throws Error(kNotDivisible) if m does not divide total, Error(kBadIndex) if i is outside 1..m.
Block partition_block(int total, int m, int i);

bool is_simple_odd(const Permutation& p);
bool is_simple_pow2(const Permutation& p);
bool is_simple_mixed(const Permutation& p);

// Block structure of a mixed-order permutation of degree q*2^s: the cyclic
// action on the 2^s blocks of size q, and p^(2^s) restricted to each block.
struct MixedStructure {
  int s = 0;
  int q = 0;
  Permutation sigma;                      // block j -> block sigma(j)
  std::vector<Permutation> restrictions;  // p^(2^s) on block j, relabelled to {1..q}
};

// Present iff p is a full cycle of degree q*2^s (q odd >= 3, s >= 1) that maps
// blocks onto blocks with every block invariant under p^(2^s). Simplicity of
// sigma and of the restrictions is not checked here.
std::optional<MixedStructure> mixed_structure(const Permutation& p);

SimplicityClass classify(const Permutation& p);

}  // namespace simperm
