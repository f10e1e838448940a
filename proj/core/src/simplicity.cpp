#include "simperm/simplicity.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "simperm/error.hpp"
#include "simperm/genealogy.hpp"

namespace simperm {
namespace {

bool is_power_of_two(int n) { return n >= 1 && std::has_single_bit(static_cast<unsigned>(n)); }

// Splits n = q * 2^s with q odd.
void split_dyadic(int n, int& q, int& s) {
  s = std::countr_zero(static_cast<unsigned>(n));
  q = n >> s;
}

}  // namespace

std::string to_string(StefanVariant v) { return v == StefanVariant::kAlpha ? "alpha" : "beta"; }

std::string to_string(const SimplicityClass& c) {
  using Tag = SimplicityClass::Tag;
  switch (c.tag) {
    case Tag::kOddSimple:
      return "OddSimple " + to_string(c.variant.value_or(StefanVariant::kAlpha));
    case Tag::kPow2Simple:
      return "Pow2Simple";
    case Tag::kMixedSimple:
      return "MixedSimple s=" + std::to_string(c.s) + " q=" + std::to_string(c.q);
    case Tag::kNotSimple:
      return "NotSimple";
    case Tag::kNotFullCycle:
      return "NotFullCycle";
  }
  return "NotSimple";
}

Block partition_block(int total, int m, int i) {
  if (total < 1 || m < 1 || total % m != 0) {
    throw Error(ErrorCode::kNotDivisible,
                std::to_string(m) + " does not divide " + std::to_string(total));
  }
  if (i < 1 || i > m) {
    throw Error(ErrorCode::kBadIndex, "block index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  }
  const int size = total / m;
  return Block((i - 1) * size + 1, i * size);
}

bool is_simple_odd(const Permutation& p) {
  const int m = p.degree();
  if (m < 3 || m % 2 == 0) return false;
  return p == stefan_alpha(m) || p == stefan_beta(m);
}

// Recursive half-swap form: p exchanges the two halves and p^2 restricted to
// each half is again simple of half the order.
bool is_simple_pow2(const Permutation& p) {
  const int n = p.degree();
  if (!is_power_of_two(n)) return false;
  if (n == 1) return true;
  const int half = n / 2;
  for (int x = 1; x <= half; ++x) {
    if (p(x) <= half) return false;
  }
  const Permutation sq = compose(p, p);
  return is_simple_pow2(restrict_to_block(sq, Block(1, half))) &&
         is_simple_pow2(restrict_to_block(sq, Block(half + 1, n)));
}

std::optional<MixedStructure> mixed_structure(const Permutation& p) {
  int q = 0;
  int s = 0;
  split_dyadic(p.degree(), q, s);
  if (s < 1 || q < 3 || !is_full_cycle(p)) return std::nullopt;

  const int blocks = 1 << s;
  std::vector<int> sigma(static_cast<std::size_t>(blocks));
  for (int j = 1; j <= blocks; ++j) {
    const Block b = partition_block(p.degree(), blocks, j);
    int lo = p(b.lo());
    int hi = lo;
    for (int x = b.lo(); x <= b.hi(); ++x) {
      lo = std::min(lo, p(x));
      hi = std::max(hi, p(x));
    }
    if (hi - lo + 1 != q || (lo - 1) % q != 0) return std::nullopt;
    sigma[static_cast<std::size_t>(j - 1)] = (lo - 1) / q + 1;
  }

  MixedStructure out{s, q, Permutation::from_images(std::move(sigma)), {}};
  const Permutation lifted = power(p, static_cast<unsigned long long>(blocks));
  for (int j = 1; j <= blocks; ++j) {
    try {
      out.restrictions.push_back(restrict_to_block(lifted, partition_block(p.degree(), blocks, j)));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return out;
}

bool is_simple_mixed(const Permutation& p) {
  const auto structure = mixed_structure(p);
  if (!structure) return false;
  if (!is_simple_pow2(structure->sigma)) return false;
  return std::all_of(structure->restrictions.begin(), structure->restrictions.end(),
                     [](const Permutation& r) { return is_simple_odd(r); });
}

SimplicityClass classify(const Permutation& p) {
  using Tag = SimplicityClass::Tag;
  SimplicityClass out;
  if (!is_full_cycle(p)) {
    out.tag = Tag::kNotFullCycle;
    return out;
  }
  const int n = p.degree();
  if (is_power_of_two(n)) {
    out.tag = is_simple_pow2(p) ? Tag::kPow2Simple : Tag::kNotSimple;
    return out;
  }
  if (n % 2 == 1) {
    if (p == stefan_alpha(n)) {
      out.tag = Tag::kOddSimple;
      out.variant = StefanVariant::kAlpha;
    } else if (p == stefan_beta(n)) {
      out.tag = Tag::kOddSimple;
      out.variant = StefanVariant::kBeta;
    } else {
      out.tag = Tag::kNotSimple;
    }
    return out;
  }
  if (is_simple_mixed(p)) {
    out.tag = Tag::kMixedSimple;
    split_dyadic(n, out.q, out.s);
  } else {
    out.tag = Tag::kNotSimple;
  }
  return out;
}

}  // namespace simperm
