#include "simperm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "simperm/error.hpp"

namespace simperm {

Block::Block(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo < 1 || hi < lo) {
    throw Error(ErrorCode::kBadIndex,
                "block {" + std::to_string(lo) + ".." + std::to_string(hi) + "} is empty or non-positive");
  }
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw Error(ErrorCode::kNotABijection, "empty image sequence");
  std::vector<bool> seen(images.size(), false);
  for (const int v : images) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::kNotABijection,
                  "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::kNotABijection, "value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "identity needs n >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition_rho(int s, int n) {
  if (s < 1 || 2 * s > n) {
    throw Error(ErrorCode::kOutOfRange,
                "rho_" + std::to_string(s) + " does not fit in degree " + std::to_string(n));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(2 * s - 2)], images[static_cast<std::size_t>(2 * s - 1)]);
  return Permutation(std::move(images));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

CycleForm::CycleForm(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::kNotCanonical, "empty cycle");
  std::vector<int> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 1) throw Error(ErrorCode::kNotCanonical, "cycle elements must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kNotCanonical, "cycle repeats an element");
  }
  if (elements_.front() != sorted.front()) {
    throw Error(ErrorCode::kNotCanonical, "cycle must start at its minimum");
  }
}

CycleForm CycleForm::canonical(std::vector<int> elements) {
  if (elements.empty()) throw Error(ErrorCode::kNotCanonical, "empty cycle");
  std::rotate(elements.begin(), std::min_element(elements.begin(), elements.end()), elements.end());
  return CycleForm(std::move(elements));
}

int CycleForm::max() const noexcept { return *std::max_element(elements_.begin(), elements_.end()); }

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::kDegreeMismatch,
                "cannot compose degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) images[static_cast<std::size_t>(x - 1)] = a(b(x));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) images[static_cast<std::size_t>(p(x) - 1)] = x;
  return Permutation::from_images(std::move(images));
}

Permutation power(const Permutation& p, unsigned long long k) {
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  while (k > 0) {
    if (k & 1ULL) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

std::vector<CycleForm> cycle_decomposition(const Permutation& p) {
  std::vector<CycleForm> cycles;
  std::vector<bool> visited(static_cast<std::size_t>(p.degree()), false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> elements;
    for (int x = start; !visited[static_cast<std::size_t>(x - 1)]; x = p(x)) {
      visited[static_cast<std::size_t>(x - 1)] = true;
      elements.push_back(x);
    }
    cycles.emplace_back(std::move(elements));
  }
  return cycles;
}

Permutation from_cycles(std::span<const CycleForm> cycles, int n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (const CycleForm& c : cycles) {
    const auto e = c.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int from = e[i];
      const int to = e[(i + 1) % e.size()];
      if (from > n) {
        throw Error(ErrorCode::kOutOfRange,
                    "cycle element " + std::to_string(from) + " exceeds degree " + std::to_string(n));
      }
      if (images[static_cast<std::size_t>(from - 1)] != 0) {
        throw Error(ErrorCode::kNotDisjoint, "element " + std::to_string(from) + " appears in two cycles");
      }
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (images[static_cast<std::size_t>(x - 1)] == 0) images[static_cast<std::size_t>(x - 1)] = x;
  }
  return Permutation::from_images(std::move(images));
}

bool is_full_cycle(const Permutation& p) {
  int length = 1;
  for (int x = p(1); x != 1; x = p(x)) ++length;
  return length == p.degree();
}

Permutation restrict_to_block(const Permutation& p, const Block& b) {
  if (b.hi() > p.degree()) {
    throw Error(ErrorCode::kNotInvariant, "block exceeds the degree");
  }
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(b.size()));
  for (int x = b.lo(); x <= b.hi(); ++x) {
    const int y = p(x);
    if (!b.contains(y)) {
      throw Error(ErrorCode::kNotInvariant,
                  "p(" + std::to_string(x) + ") = " + std::to_string(y) + " leaves the block");
    }
    images.push_back(y - b.lo() + 1);
  }
  return Permutation::from_images(std::move(images));
}

void for_each_full_cycle(int n, const std::function<void(const Permutation&)>& visit, int image_of_one) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "degree must be positive");
  if (n == 1) {
    if (image_of_one == 0 || image_of_one == 1) visit(Permutation::identity(1));
    return;
  }
  if (image_of_one != 0 && (image_of_one < 2 || image_of_one > n)) return;

  // order[0] == 1; the tail order[1..] runs over arrangements of {2..n}.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  auto first_free = order.begin() + 1;
  if (image_of_one != 0) {
    std::rotate(order.begin() + 1, order.begin() + image_of_one - 1, order.begin() + image_of_one);
    first_free = order.begin() + 2;
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  do {
    for (std::size_t i = 0; i < order.size(); ++i) {
      images[static_cast<std::size_t>(order[i] - 1)] = order[(i + 1) % order.size()];
    }
    visit(Permutation::from_images(images));
  } while (std::next_permutation(first_free, order.end()));
}

}  // namespace simperm
