#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "simperm/permutation.hpp"

namespace simperm {

using Rational = boost::multiprecision::cpp_rational;

// x -> slope * x + intercept
struct AffinePiece {
  long long slope = 0;
  long long intercept = 0;

  Rational operator()(const Rational& x) const { return Rational(slope) * x + Rational(intercept); }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

// Primitive function of a permutation on the natural partition {1..n}:
// branch k interpolates (k, p(k)) and (k+1, p(k+1)) on J_k = [k, k+1];
// constant p(1) left of 1 and p(n) from n on.
class PiecewiseLinearMap {
 public:
  const Permutation& source() const noexcept { return source_; }
  int degree() const noexcept { return source_.degree(); }
  std::span<const AffinePiece> branches() const noexcept { return branches_; }
  // 1-based; Error(kBadIndex) outside 1..n-1.
  const AffinePiece& branch(int k) const;
  int left_clamp() const noexcept { return source_(1); }
  int right_clamp() const noexcept { return source_(degree()); }

  Rational operator()(const Rational& x) const;

 private:
  friend PiecewiseLinearMap primitive_function(const Permutation& p);
  PiecewiseLinearMap(Permutation source, std::vector<AffinePiece> branches)
      : source_(std::move(source)), branches_(std::move(branches)) {}

  Permutation source_;
  std::vector<AffinePiece> branches_;
};

// Error(kDegreeTooSmall) for degree < 2.
PiecewiseLinearMap primitive_function(const Permutation& p);
Rational eval_map(const PiecewiseLinearMap& f, const Rational& x);
// f(J_k) = [min(p(k), p(k+1)), max(p(k), p(k+1))]. Error(kBadIndex) outside 1..n-1.
Block interval_image(const PiecewiseLinearMap& f, int k);

// Directed graph on the intervals J_1..J_{n-1}; vertices are 1-based.
class MarkovGraph {
 public:
  // Edges are (from, to) pairs in 1..vertex_count; duplicates are ignored.
  // Error(kBadIndex) on out-of-range endpoints.
  MarkovGraph(int vertex_count, std::span<const std::pair<int, int>> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  bool has_edge(int from, int to) const;
  // Sorted ascending.
  std::span<const int> successors(int from) const;
  std::size_t edge_count() const noexcept;
  // Sorted by (from, to).
  std::vector<std::pair<int, int>> edges() const;

 private:
  int vertex_count_;
  std::vector<std::vector<int>> successors_;
};

// Edge k -> l iff f(J_k) covers J_l. Error(kDegreeTooSmall) for degree < 2.
MarkovGraph markov_graph(const Permutation& p);

// Closed walk k_0 -> k_1 -> ... -> k_{m-1} -> k_0.
struct Loop {
  std::vector<int> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  friend bool operator==(const Loop&, const Loop&) = default;
};

// True iff the cyclic word is not a proper power of a shorter word.
bool is_nonrepetitive(std::span<const int> word);

// True iff trace(A^m) != 0 for the Boolean adjacency matrix A, i.e. some
// closed walk of length m exists (repetitive or not).
bool has_closed_walk(const MarkovGraph& g, int m);

// Deterministic witness: least starting vertex, then least successor at each
// step. Depth-first with backward-reachability pruning; exponential in m in
// the worst case, intended for n and m up to about 20.
std::optional<Loop> find_nonrepetitive_loop(const MarkovGraph& g, int m);
bool has_nonrepetitive_loop(const MarkovGraph& g, int m);

// m == degree(p), or the Markov graph carries a non-repetitive loop of length m.
// Error(kNotACycle) unless p is a full cycle. A one-point orbit forces only m = 1.
bool forces_period(const Permutation& p, int m);

// n = odd_part * 2^exponent.
struct SharkovskiiKey {
  long long odd_part = 1;
  int exponent = 0;

  static SharkovskiiKey of(long long n);
  long long value() const noexcept { return odd_part << exponent; }
};

// The Sharkovskii order: 3 < 5 < 7 < ... < 2*3 < 2*5 < ... < 4*3 < ... < 8 < 4 < 2 < 1.
bool sharkovskii_less(long long a, long long b);

struct PeriodicOrbit {
  std::vector<Rational> points;  // x_0, f(x_0), ..., f^{m-1}(x_0)
  int period = 0;                // minimal period, divides the loop length
};

// Point x_0 in J_{k_0} whose itinerary follows `loop` with f^m(x_0) = x_0.
// The preimage of J_{k_0} is pulled back through the loop's branches, then
// the composed affine map's fixed point is solved exactly.
// Error(kBadIndex) if `loop` is not a closed walk of the Markov graph of f;
// Error(kDegenerateLoop) if the composed map has slope 1 and no fixed point.
PeriodicOrbit periodic_orbit_from_loop(const PiecewiseLinearMap& f, const Loop& loop);

// "digraph markov { J1; ...; J1 -> J2; ... }" with vertices in index order and
// edges sorted, one statement per line.
std::string export_dot(const MarkovGraph& g);

}  // namespace simperm
