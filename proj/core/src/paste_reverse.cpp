#include "simperm/paste_reverse.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "simperm/error.hpp"

namespace simperm {

CycleForm paste_cycles(const CycleForm& u, const CycleForm& v) {
  const auto ue = u.elements();
  const auto ve = v.elements();
  const std::unordered_set<int> in_u(ue.begin(), ue.end());
  for (const int x : ve) {
    if (in_u.count(x) != 0) {
      throw Error(ErrorCode::kNotDisjoint, "element " + std::to_string(x) + " is in both cycles");
    }
  }
  if (v.min() < u.min()) {
    throw Error(ErrorCode::kBadOrdering, "the left cycle must hold the minimum of the union");
  }
  std::vector<int> joined(ue.begin(), ue.end());
  joined.insert(joined.end(), ve.begin(), ve.end());
  return CycleForm(std::move(joined));
}

CycleForm reverse_cycle(const CycleForm& u) {
  const auto e = u.elements();
  std::vector<int> out(e.begin(), e.end());
  std::reverse(out.begin() + 1, out.end());
  return CycleForm(std::move(out));
}

Permutation left_paste(const Permutation& a, const Permutation& b) {
  const int n = b.degree();
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(a.degree() + n));
  for (const int v : a.images()) images.push_back(v + n);
  images.insert(images.end(), b.images().begin(), b.images().end());
  return Permutation::from_images(std::move(images));
}

Permutation right_paste(const Permutation& a, const Permutation& b) {
  const int m = a.degree();
  std::vector<int> images(a.images().begin(), a.images().end());
  images.reserve(static_cast<std::size_t>(m + b.degree()));
  for (const int v : b.images()) images.push_back(v + m);
  return Permutation::from_images(std::move(images));
}

Permutation reverse_perm(const Permutation& a) {
  std::vector<int> images(a.images().rbegin(), a.images().rend());
  return Permutation::from_images(std::move(images));
}

}  // namespace simperm
