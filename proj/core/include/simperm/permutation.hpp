#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace simperm {

// Contiguous run {lo, lo+1, ..., hi} of points, 1-based.
class Block {
 public:
  Block(int lo, int hi);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return hi_; }
  int size() const noexcept { return hi_ - lo_ + 1; }
  bool contains(int x) const noexcept { return lo_ <= x && x <= hi_; }

  friend bool operator==(const Block&, const Block&) = default;

 private:
  int lo_;
  int hi_;
};

// A bijection of {1..n}, stored by its image sequence: images()[i-1] == p(i).
// Immutable once built.
class Permutation {
 public:
  // Throws Error(kNotABijection) unless `images` is a bijection of {1..n}, n >= 1.
  static Permutation from_images(std::vector<int> images);
  static Permutation identity(int n);
  // Swaps 2s-1 and 2s in S_n. Throws Error(kOutOfRange) if 2s > n.
  static Permutation transposition_rho(int s, int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  // 1-based evaluation; x must lie in [1, degree()].
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Shorter degree first, then lexicographic on images.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// A single cycle (i_1, ..., i_q) in canonical rotation: i_1 is the minimum.
class CycleForm {
 public:
  // Throws Error(kNotCanonical) if elements are empty, repeated, non-positive
  // or not rotated so that the minimum comes first.
  explicit CycleForm(std::vector<int> elements);
  // Rotates any valid cycle listing into canonical form.
  static CycleForm canonical(std::vector<int> elements);

  std::span<const int> elements() const noexcept { return elements_; }
  int length() const noexcept { return static_cast<int>(elements_.size()); }
  int min() const noexcept { return elements_.front(); }
  int max() const noexcept;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;

 private:
  std::vector<int> elements_;
};

// (a o b)(x) = a(b(x)): the right factor acts first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, unsigned long long k);

// Disjoint cycles covering {1..n}, sorted by minimum, fixed points included as 1-cycles.
std::vector<CycleForm> cycle_decomposition(const Permutation& p);
// Rebuilds a permutation of degree n from disjoint cycles; unlisted points are fixed.
Permutation from_cycles(std::span<const CycleForm> cycles, int n);
bool is_full_cycle(const Permutation& p);

// The permutation induced on b, relabelled to {1..b.size()}.
// Throws Error(kNotInvariant) unless p maps b onto itself.
Permutation restrict_to_block(const Permutation& p, const Block& b);

// Calls `visit` once for every n-cycle of degree n, in lexicographic order of
// the cycle listing (1, c_2, ..., c_n). A nonzero `image_of_one` restricts the
// sweep to cycles with p(1) == image_of_one.
void for_each_full_cycle(int n, const std::function<void(const Permutation&)>& visit,
                         int image_of_one = 0);

}  // namespace simperm
