#include "simperm/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <string>

#include "simperm/error.hpp"

namespace simperm {
namespace {

// Boolean matrix with bit-packed rows.
class BoolMatrix {
 public:
  explicit BoolMatrix(int size)
      : size_(size), words_((static_cast<std::size_t>(size) + 63) / 64),
        rows_(static_cast<std::size_t>(size), std::vector<std::uint64_t>(words_, 0)) {}

  static BoolMatrix identity(int size) {
    BoolMatrix m(size);
    for (int i = 0; i < size; ++i) m.set(i, i);
    return m;
  }

  void set(int r, int c) { rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) / 64] |= bit(c); }
  bool get(int r, int c) const {
    return (rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) / 64] & bit(c)) != 0;
  }

  BoolMatrix operator*(const BoolMatrix& rhs) const {
    BoolMatrix out(size_);
    for (int i = 0; i < size_; ++i) {
      auto& dst = out.rows_[static_cast<std::size_t>(i)];
      for (int k = 0; k < size_; ++k) {
        if (!get(i, k)) continue;
        const auto& src = rhs.rows_[static_cast<std::size_t>(k)];
        for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
      }
    }
    return out;
  }

 private:
  static std::uint64_t bit(int c) { return std::uint64_t{1} << (static_cast<unsigned>(c) % 64); }

  int size_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

void require_loop_length(int m) {
  if (m < 1) throw Error(ErrorCode::kOutOfRange, "loop length must be >= 1");
}

// back[r][v]: a walk of length r leads from v to `target` through vertices >= target.
std::vector<std::vector<char>> backward_reach(const MarkovGraph& g, int target, int m) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<char>> back(static_cast<std::size_t>(m) + 1, std::vector<char>(n + 1, 0));
  back[0][static_cast<std::size_t>(target)] = 1;
  for (int r = 1; r <= m; ++r) {
    for (int v = target; v <= g.vertex_count(); ++v) {
      for (const int w : g.successors(v)) {
        if (w >= target && back[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(w)]) {
          back[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)] = 1;
          break;
        }
      }
    }
  }
  return back;
}

bool extend(const MarkovGraph& g, int m, const std::vector<std::vector<char>>& back, std::vector<int>& path) {
  const int start = path.front();
  if (static_cast<int>(path.size()) == m) {
    return g.has_edge(path.back(), start) && is_nonrepetitive(path);
  }
  const int remaining = m - static_cast<int>(path.size());
  for (const int w : g.successors(path.back())) {
    if (w < start || !back[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(w)]) continue;
    path.push_back(w);
    if (extend(g, m, back, path)) return true;
    path.pop_back();
  }
  return false;
}

std::string to_string(const Rational& x) { return x.str(); }

}  // namespace

const AffinePiece& PiecewiseLinearMap::branch(int k) const {
  if (k < 1 || k >= degree()) {
    throw Error(ErrorCode::kBadIndex, "branch " + std::to_string(k) + " outside 1.." + std::to_string(degree() - 1));
  }
  return branches_[static_cast<std::size_t>(k - 1)];
}

Rational PiecewiseLinearMap::operator()(const Rational& x) const {
  if (x < 1) return Rational(left_clamp());
  if (x >= degree()) return Rational(right_clamp());
  // 1 <= x < n, so truncation is floor.
  const long long k = static_cast<long long>(boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x));
  return branches_[static_cast<std::size_t>(k - 1)](x);
}

PiecewiseLinearMap primitive_function(const Permutation& p) {
  if (p.degree() < 2) throw Error(ErrorCode::kDegreeTooSmall, "primitive function needs degree >= 2");
  std::vector<AffinePiece> branches;
  branches.reserve(static_cast<std::size_t>(p.degree() - 1));
  for (int k = 1; k < p.degree(); ++k) {
    const long long slope = p(k + 1) - p(k);
    branches.push_back({slope, p(k) - slope * k});
  }
  return PiecewiseLinearMap(p, std::move(branches));
}

Rational eval_map(const PiecewiseLinearMap& f, const Rational& x) { return f(x); }

Block interval_image(const PiecewiseLinearMap& f, int k) {
  if (k < 1 || k >= f.degree()) {
    throw Error(ErrorCode::kBadIndex, "interval " + std::to_string(k) + " outside 1.." + std::to_string(f.degree() - 1));
  }
  const int a = f.source()(k);
  const int b = f.source()(k + 1);
  return Block(std::min(a, b), std::max(a, b));
}

MarkovGraph::MarkovGraph(int vertex_count, std::span<const std::pair<int, int>> edges)
    : vertex_count_(vertex_count), successors_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
  if (vertex_count < 1) throw Error(ErrorCode::kBadIndex, "graph needs at least one vertex");
  for (const auto& [from, to] : edges) {
    if (from < 1 || from > vertex_count || to < 1 || to > vertex_count) {
      throw Error(ErrorCode::kBadIndex,
                  "edge " + std::to_string(from) + "->" + std::to_string(to) + " outside the vertex range");
    }
    successors_[static_cast<std::size_t>(from - 1)].push_back(to);
  }
  for (auto& s : successors_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

bool MarkovGraph::has_edge(int from, int to) const {
  if (from < 1 || from > vertex_count_) return false;
  const auto& s = successors_[static_cast<std::size_t>(from - 1)];
  return std::binary_search(s.begin(), s.end(), to);
}

std::span<const int> MarkovGraph::successors(int from) const {
  if (from < 1 || from > vertex_count_) {
    throw Error(ErrorCode::kBadIndex, "vertex " + std::to_string(from) + " outside the graph");
  }
  return successors_[static_cast<std::size_t>(from - 1)];
}

std::size_t MarkovGraph::edge_count() const noexcept {
  std::size_t count = 0;
  for (const auto& s : successors_) count += s.size();
  return count;
}

std::vector<std::pair<int, int>> MarkovGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int from = 1; from <= vertex_count_; ++from) {
    for (const int to : successors_[static_cast<std::size_t>(from - 1)]) out.emplace_back(from, to);
  }
  return out;
}

MarkovGraph markov_graph(const Permutation& p) {
  if (p.degree() < 2) throw Error(ErrorCode::kDegreeTooSmall, "Markov graph needs degree >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k < p.degree(); ++k) {
    const int lo = std::min(p(k), p(k + 1));
    const int hi = std::max(p(k), p(k + 1));
    for (int l = lo; l + 1 <= hi; ++l) edges.emplace_back(k, l);
  }
  return MarkovGraph(p.degree() - 1, edges);
}

bool is_nonrepetitive(std::span<const int> word) {
  const std::size_t m = word.size();
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < m && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) return false;
  }
  return m > 0;
}

bool has_closed_walk(const MarkovGraph& g, int m) {
  require_loop_length(m);
  const int n = g.vertex_count();
  BoolMatrix base(n);
  for (const auto& [from, to] : g.edges()) base.set(from - 1, to - 1);
  BoolMatrix acc = BoolMatrix::identity(n);
  for (unsigned k = static_cast<unsigned>(m); k > 0; k >>= 1) {
    if (k & 1U) acc = acc * base;
    if (k > 1) base = base * base;
  }
  for (int i = 0; i < n; ++i) {
    if (acc.get(i, i)) return true;
  }
  return false;
}

std::optional<Loop> find_nonrepetitive_loop(const MarkovGraph& g, int m) {
  require_loop_length(m);
  // A loop through a smaller vertex is found, rotated, from that vertex first,
  // so the search from `start` may ignore everything below it.
  for (int start = 1; start <= g.vertex_count(); ++start) {
    const auto back = backward_reach(g, start, m);
    if (!back[static_cast<std::size_t>(m)][static_cast<std::size_t>(start)]) continue;
    std::vector<int> path{start};
    path.reserve(static_cast<std::size_t>(m));
    if (extend(g, m, back, path)) return Loop{std::move(path)};
  }
  return std::nullopt;
}

bool has_nonrepetitive_loop(const MarkovGraph& g, int m) {
  if (!has_closed_walk(g, m)) return false;
  return find_nonrepetitive_loop(g, m).has_value();
}

bool forces_period(const Permutation& p, int m) {
  require_loop_length(m);
  if (!is_full_cycle(p)) throw Error(ErrorCode::kNotACycle, "forcing is defined for full cycles");
  if (m == p.degree()) return true;
  if (p.degree() < 2) return false;
  return has_nonrepetitive_loop(markov_graph(p), m);
}

SharkovskiiKey SharkovskiiKey::of(long long n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "Sharkovskii order is defined on positive integers");
  SharkovskiiKey key;
  key.exponent = std::countr_zero(static_cast<unsigned long long>(n));
  key.odd_part = n >> key.exponent;
  return key;
}

bool sharkovskii_less(long long a, long long b) {
  const SharkovskiiKey ka = SharkovskiiKey::of(a);
  const SharkovskiiKey kb = SharkovskiiKey::of(b);
  const bool a_mixed = ka.odd_part > 1;
  const bool b_mixed = kb.odd_part > 1;
  if (a_mixed && b_mixed) {
    return ka.exponent < kb.exponent || (ka.exponent == kb.exponent && ka.odd_part < kb.odd_part);
  }
  if (a_mixed) return true;
  if (b_mixed) return false;
  return ka.exponent > kb.exponent;
}

PeriodicOrbit periodic_orbit_from_loop(const PiecewiseLinearMap& f, const Loop& loop) {
  const int m = loop.length();
  if (m == 0) throw Error(ErrorCode::kBadIndex, "empty loop");
  const auto& v = loop.vertices;
  for (int i = 0; i < m; ++i) {
    const int from = v[static_cast<std::size_t>(i)];
    const int to = v[static_cast<std::size_t>((i + 1) % m)];
    if (to < 1 || to >= f.degree()) throw Error(ErrorCode::kBadIndex, "loop vertex outside the graph");
    const Block image = interval_image(f, from);
    if (image.lo() > to || to + 1 > image.hi()) {
      throw Error(ErrorCode::kBadIndex,
                  "J" + std::to_string(from) + " does not cover J" + std::to_string(to));
    }
  }

  // Pull J_{k_0} back through the branches in reverse order.
  Rational lo(v.front());
  Rational hi(v.front() + 1);
  for (int i = m - 1; i >= 0; --i) {
    const AffinePiece& piece = f.branch(v[static_cast<std::size_t>(i)]);
    Rational a = (lo - piece.intercept) / piece.slope;
    Rational b = (hi - piece.intercept) / piece.slope;
    if (b < a) std::swap(a, b);
    lo = a;
    hi = b;
  }

  // f^m on [lo, hi] is slope * x + offset.
  Rational slope(1);
  Rational offset(0);
  for (const int k : v) {
    const AffinePiece& piece = f.branch(k);
    slope *= piece.slope;
    offset = offset * piece.slope + piece.intercept;
  }

  Rational seed;
  if (slope == 1) {
    if (offset != 0) throw Error(ErrorCode::kDegenerateLoop, "composed branch is a translation");
    seed = (lo + hi) / 2;
  } else {
    seed = offset / (Rational(1) - slope);
  }

  PeriodicOrbit orbit;
  orbit.points.reserve(static_cast<std::size_t>(m));
  Rational x = seed;
  for (int i = 0; i < m; ++i) {
    const int k = v[static_cast<std::size_t>(i)];
    if (x < k || x > k + 1) {
      throw Error(ErrorCode::kDegenerateLoop, "iterate " + std::to_string(i) + " = " + to_string(x) +
                                                  " leaves J" + std::to_string(k));
    }
    orbit.points.push_back(x);
    x = f.branch(k)(x);
  }
  if (x != seed) throw Error(ErrorCode::kDegenerateLoop, "solved point does not return");

  orbit.period = m;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0 && orbit.points[static_cast<std::size_t>(d)] == seed) {
      orbit.period = d;
      break;
    }
  }
  return orbit;
}

std::string export_dot(const MarkovGraph& g) {
  std::ostringstream out;
  out << "digraph markov {\n";
  for (int k = 1; k <= g.vertex_count(); ++k) out << "  J" << k << ";\n";
  for (const auto& [from, to] : g.edges()) out << "  J" << from << " -> J" << to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace simperm
