#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simperm/permutation.hpp"
#include "simperm/simplicity.hpp"

namespace simperm {

// Stefan permutations of odd degree m >= 3 (Error(kBadDegree) otherwise).
//   alpha_{2n+1} = (1, 2n+1, n+1, n, n+2, n-1, ..., 2, 2n)
//   beta_{2n+1}  = (1, n+1, n+2, n, n+3, n-1, ..., 2, 2n+1)
Permutation stefan_alpha(int m);
Permutation stefan_beta(int m);
Permutation stefan(StefanVariant v, int m);

// Degree doubling: p*(2k-1) = 2p(k)-1, p*(2k) = 2p(k).
Permutation star(const Permutation& p);
// Degree halving: p_*(k) = floor((p(2k)+1)/2). Error(kOddDegree) on odd degree.
Permutation substar(const Permutation& p);

enum class BranchFamily {
  kPow2Theta,
  kPow2Phi,
  kMixedTheta,
  kMixedEta,
  kMixedPhi,
  kMixedVarphi,
  kStefanAlpha,
  kStefanBeta,
};

inline constexpr BranchFamily kAllBranchFamilies[] = {
    BranchFamily::kPow2Theta,  BranchFamily::kPow2Phi,    BranchFamily::kMixedTheta,
    BranchFamily::kMixedEta,   BranchFamily::kMixedPhi,   BranchFamily::kMixedVarphi,
    BranchFamily::kStefanAlpha, BranchFamily::kStefanBeta,
};

// "pow2_theta", "mixed_varphi", ...
std::string to_string(BranchFamily f);
std::optional<BranchFamily> parse_branch_family(std::string_view name);

// theta_1 = phi_1 = (1), theta_n = e_{n/2} |<> theta_{n/2},
// phi_n = e~_{n/2} |<> phi~_{n/2}. Order must be a power of two.
Permutation pow2_branch(BranchFamily family, int order);

// Order 4n+2 >= 6:
//   theta = alpha_{2n+1} |<> e_{2n+1}    eta    = e_{2n+1} |<> alpha_{2n+1}
//   phi   = beta_{2n+1}  |<> e_{2n+1}    varphi = e_{2n+1} |<> beta_{2n+1}
Permutation mixed_branch(BranchFamily family, int order);

// Member of `family` at `order`; dispatches to the three generators above.
Permutation branch_value(BranchFamily family, int order);

// Orders of the first `count` members: 1,2,4,... / 6,10,14,... / 3,5,7,...
std::vector<int> family_orders(BranchFamily family, int count);
std::vector<Permutation> family_chain(BranchFamily family, int count);

// S = left_{2n+1} <>| right_{2n+1}: the square shared by a group of Sim(4n+2).
struct SquareSpec {
  StefanVariant left = StefanVariant::kAlpha;
  StefanVariant right = StefanVariant::kAlpha;
  int n = 1;

  friend bool operator==(const SquareSpec&, const SquareSpec&) = default;
};

// "alpha-alpha n=1" style label.
std::string to_string(const SquareSpec& spec);

// Presentation order: alpha-alpha, beta-beta, alpha-beta, beta-alpha.
std::vector<SquareSpec> square_specs(int n);

Permutation square_spec(const SquareSpec& spec);

// The unique theta with theta(1) = i, theta^2 = S, exchanging the two half
// blocks; built by the alternating chase
//   theta(S^t(1)) = S^t(i),  theta(S^t(i)) = S^{t+1}(1),  t = 0..2n.
// Error(kBadIndex) unless 2n+2 <= i <= 4n+2; Error(kChaseFailure) if the chase
// does not close into a full cycle whose square is S.
Permutation square_root_with(const Permutation& square, int i);

// All members of Sim(4n+2): square_root_with over square_specs(n) and
// i = 2n+2..4n+2, in that order. Exactly 8n+4 permutations.
std::vector<Permutation> enumerate_sim_4n2(int n);

inline constexpr int kBruteForceMaxOrder = 10;

// Every full cycle of the given degree that classify() reports simple, in
// lexicographic one-line order. Error(kTooLarge) above kBruteForceMaxOrder.
std::vector<Permutation> brute_force_sim(int order);

// Where a simple permutation sits among the known branches.
struct GenealogyReport {
  SimplicityClass cls;
  std::vector<BranchFamily> families;       // branches whose member of this order equals p
  std::vector<Permutation> predecessors;    // nearest first, down to the first predecessor
  std::optional<SquareSpec> square;         // order 4n+2: the spec with p^2 == square_spec
  int root_index = 0;                       // order 4n+2: p(1)
};

GenealogyReport genealogy_of(const Permutation& p);

}  // namespace simperm
