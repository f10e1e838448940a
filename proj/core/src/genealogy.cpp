#include "simperm/genealogy.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <string>

#include "simperm/error.hpp"
#include "simperm/paste_reverse.hpp"

namespace simperm {
namespace {

void require_stefan_degree(int m) {
  if (m < 3 || m % 2 == 0) {
    throw Error(ErrorCode::kBadDegree, "Stefan permutations need odd degree >= 3, got " + std::to_string(m));
  }
}

bool is_pow2_family(BranchFamily f) { return f == BranchFamily::kPow2Theta || f == BranchFamily::kPow2Phi; }

bool is_stefan_family(BranchFamily f) {
  return f == BranchFamily::kStefanAlpha || f == BranchFamily::kStefanBeta;
}

bool admits_order(BranchFamily f, int order) {
  if (is_pow2_family(f)) return order >= 1 && std::has_single_bit(static_cast<unsigned>(order));
  if (is_stefan_family(f)) return order >= 3 && order % 2 == 1;
  return order >= 6 && order % 4 == 2;
}

}  // namespace

Permutation stefan_alpha(int m) {
  require_stefan_degree(m);
  const int n = (m - 1) / 2;
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = 2 * n + 2 - i;
  images[static_cast<std::size_t>(n)] = n;
  for (int i = n + 2; i <= 2 * n; ++i) images[static_cast<std::size_t>(i - 1)] = 2 * n + 1 - i;
  images[static_cast<std::size_t>(2 * n)] = n + 1;
  return Permutation::from_images(std::move(images));
}

Permutation stefan_beta(int m) {
  require_stefan_degree(m);
  const int n = (m - 1) / 2;
  std::vector<int> images(static_cast<std::size_t>(m));
  images[0] = n + 1;
  for (int i = 2; i <= n + 1; ++i) images[static_cast<std::size_t>(i - 1)] = 2 * n + 3 - i;
  for (int i = n + 2; i <= 2 * n + 1; ++i) images[static_cast<std::size_t>(i - 1)] = 2 * n + 2 - i;
  return Permutation::from_images(std::move(images));
}

Permutation stefan(StefanVariant v, int m) {
  return v == StefanVariant::kAlpha ? stefan_alpha(m) : stefan_beta(m);
}

Permutation star(const Permutation& p) {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(2 * p.degree()));
  for (const int v : p.images()) {
    images.push_back(2 * v - 1);
    images.push_back(2 * v);
  }
  return Permutation::from_images(std::move(images));
}

Permutation substar(const Permutation& p) {
  if (p.degree() % 2 != 0) {
    throw Error(ErrorCode::kOddDegree, "substar needs even degree, got " + std::to_string(p.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(p.degree() / 2));
  for (int k = 1; k <= p.degree() / 2; ++k) images[static_cast<std::size_t>(k - 1)] = (p(2 * k) + 1) / 2;
  // Not every even permutation halves to a bijection; from_images reports it.
  return Permutation::from_images(std::move(images));
}

std::string to_string(BranchFamily f) {
  switch (f) {
    case BranchFamily::kPow2Theta: return "pow2_theta";
    case BranchFamily::kPow2Phi: return "pow2_phi";
    case BranchFamily::kMixedTheta: return "mixed_theta";
    case BranchFamily::kMixedEta: return "mixed_eta";
    case BranchFamily::kMixedPhi: return "mixed_phi";
    case BranchFamily::kMixedVarphi: return "mixed_varphi";
    case BranchFamily::kStefanAlpha: return "stefan_alpha";
    case BranchFamily::kStefanBeta: return "stefan_beta";
  }
  return "unknown";
}

std::optional<BranchFamily> parse_branch_family(std::string_view name) {
  for (const BranchFamily f : kAllBranchFamilies) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Permutation pow2_branch(BranchFamily family, int order) {
  if (!is_pow2_family(family)) {
    throw Error(ErrorCode::kBadDegree, to_string(family) + " is not a power-of-two branch");
  }
  if (!admits_order(family, order)) {
    throw Error(ErrorCode::kBadDegree, "order " + std::to_string(order) + " is not a power of two");
  }
  Permutation value = Permutation::identity(1);
  for (int half = 1; half < order; half *= 2) {
    const Permutation e = Permutation::identity(half);
    value = family == BranchFamily::kPow2Theta ? left_paste(e, value)
                                               : left_paste(reverse_perm(e), reverse_perm(value));
  }
  return value;
}

Permutation mixed_branch(BranchFamily family, int order) {
  if (is_pow2_family(family) || is_stefan_family(family)) {
    throw Error(ErrorCode::kBadDegree, to_string(family) + " is not a 4n+2 branch");
  }
  if (!admits_order(family, order)) {
    throw Error(ErrorCode::kBadDegree, "order " + std::to_string(order) + " is not of the form 4n+2 >= 6");
  }
  const int r = order / 2;
  const Permutation e = Permutation::identity(r);
  switch (family) {
    case BranchFamily::kMixedTheta: return left_paste(stefan_alpha(r), e);
    case BranchFamily::kMixedEta: return left_paste(e, stefan_alpha(r));
    case BranchFamily::kMixedPhi: return left_paste(stefan_beta(r), e);
    default: return left_paste(e, stefan_beta(r));
  }
}

Permutation branch_value(BranchFamily family, int order) {
  if (is_pow2_family(family)) return pow2_branch(family, order);
  if (family == BranchFamily::kStefanAlpha) return stefan_alpha(order);
  if (family == BranchFamily::kStefanBeta) return stefan_beta(order);
  return mixed_branch(family, order);
}

std::vector<int> family_orders(BranchFamily family, int count) {
  std::vector<int> orders;
  for (int k = 0; k < count; ++k) {
    if (is_pow2_family(family)) {
      if (k >= 30) throw Error(ErrorCode::kTooLarge, "power-of-two order overflows");
      orders.push_back(1 << k);
    } else if (is_stefan_family(family)) {
      orders.push_back(3 + 2 * k);
    } else {
      orders.push_back(6 + 4 * k);
    }
  }
  return orders;
}

std::vector<Permutation> family_chain(BranchFamily family, int count) {
  std::vector<Permutation> chain;
  for (const int order : family_orders(family, count)) chain.push_back(branch_value(family, order));
  return chain;
}

std::string to_string(const SquareSpec& spec) {
  return to_string(spec.left) + "-" + to_string(spec.right) + " n=" + std::to_string(spec.n);
}

std::vector<SquareSpec> square_specs(int n) {
  using V = StefanVariant;
  return {{V::kAlpha, V::kAlpha, n}, {V::kBeta, V::kBeta, n}, {V::kAlpha, V::kBeta, n}, {V::kBeta, V::kAlpha, n}};
}

Permutation square_spec(const SquareSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::kBadDegree, "square spec needs n >= 1");
  const int m = 2 * spec.n + 1;
  return right_paste(stefan(spec.left, m), stefan(spec.right, m));
}

Permutation square_root_with(const Permutation& square, int i) {
  const int order = square.degree();
  if (order < 6 || order % 4 != 2) {
    throw Error(ErrorCode::kChaseFailure, "square has degree " + std::to_string(order) + ", not 4n+2");
  }
  const int half = order / 2;
  if (i < half + 1 || i > order) {
    throw Error(ErrorCode::kBadIndex,
                "theta(1) must lie in " + std::to_string(half + 1) + ".." + std::to_string(order));
  }

  std::vector<int> images(static_cast<std::size_t>(order), 0);
  auto assign = [&](int from, int to) {
    int& slot = images[static_cast<std::size_t>(from - 1)];
    if (slot != 0 && slot != to) {
      throw Error(ErrorCode::kChaseFailure, "conflicting images for " + std::to_string(from));
    }
    slot = to;
  };
  int left = 1;
  int right = i;
  for (int t = 0; t < half; ++t) {
    assign(left, right);
    assign(right, square(left));
    left = square(left);
    right = square(right);
  }
  if (std::find(images.begin(), images.end(), 0) != images.end()) {
    throw Error(ErrorCode::kChaseFailure, "chase did not reach every point");
  }

  Permutation root = [&] {
    try {
      return Permutation::from_images(images);
    } catch (const Error& e) {
      throw Error(ErrorCode::kChaseFailure, e.what());
    }
  }();
  if (!is_full_cycle(root) || compose(root, root) != square) {
    throw Error(ErrorCode::kChaseFailure, "chase result is not a full-cycle square root");
  }
  return root;
}

std::vector<Permutation> enumerate_sim_4n2(int n) {
  if (n < 1) throw Error(ErrorCode::kBadDegree, "enumeration needs n >= 1");
  const int order = 4 * n + 2;
  const auto specs = square_specs(n);

  std::vector<std::future<std::vector<Permutation>>> groups;
  for (const SquareSpec& spec : specs) {
    groups.push_back(std::async(std::launch::async, [spec, n, order] {
      const Permutation square = square_spec(spec);
      std::vector<Permutation> out;
      for (int i = 2 * n + 2; i <= order; ++i) {
        Permutation root = square_root_with(square, i);
        if (classify(root).tag != SimplicityClass::Tag::kMixedSimple) {
          throw Error(ErrorCode::kChaseFailure, "square root is not simple");
        }
        out.push_back(std::move(root));
      }
      return out;
    }));
  }
  std::vector<Permutation> all;
  all.reserve(static_cast<std::size_t>(8 * n + 4));
  for (auto& g : groups) {
    auto part = g.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::vector<Permutation> brute_force_sim(int order) {
  if (order < 1) throw Error(ErrorCode::kBadDegree, "order must be positive");
  if (order > kBruteForceMaxOrder) {
    throw Error(ErrorCode::kTooLarge, "brute force is capped at order " + std::to_string(kBruteForceMaxOrder));
  }
  if (order == 1) return {Permutation::identity(1)};

  std::vector<std::future<std::vector<Permutation>>> parts;
  for (int first = 2; first <= order; ++first) {
    parts.push_back(std::async(std::launch::async, [order, first] {
      std::vector<Permutation> found;
      for_each_full_cycle(
          order,
          [&found](const Permutation& p) {
            if (classify(p).is_simple()) found.push_back(p);
          },
          first);
      return found;
    }));
  }
  std::vector<Permutation> all;
  for (auto& part : parts) {
    auto found = part.get();
    all.insert(all.end(), found.begin(), found.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

GenealogyReport genealogy_of(const Permutation& p) {
  GenealogyReport report;
  report.cls = classify(p);
  if (!report.cls.is_simple()) return report;

  const int order = p.degree();
  for (const BranchFamily f : kAllBranchFamilies) {
    if (admits_order(f, order) && branch_value(f, order) == p) report.families.push_back(f);
  }

  using Tag = SimplicityClass::Tag;
  switch (report.cls.tag) {
    case Tag::kPow2Simple: {
      Permutation q = p;
      while (q.degree() > 1) {
        q = substar(q);
        report.predecessors.push_back(q);
      }
      break;
    }
    case Tag::kOddSimple:
      for (int m = order - 2; m >= 3; m -= 2) report.predecessors.push_back(stefan(*report.cls.variant, m));
      break;
    case Tag::kMixedSimple:
      if (report.cls.s != 1) break;
      if (!report.families.empty()) {
        for (int m = order - 4; m >= 6; m -= 4) report.predecessors.push_back(branch_value(report.families.front(), m));
      }
      for (const SquareSpec& spec : square_specs((order - 2) / 4)) {
        if (compose(p, p) == square_spec(spec)) report.square = spec;
      }
      report.root_index = p(1);
      break;
    default:
      break;
  }
  return report;
}

}  // namespace simperm
