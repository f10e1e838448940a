#pragma once

#include "simperm/permutation.hpp"

namespace simperm {

// Pasting of disjoint cycles: (u_1..u_k) <> (v_1..v_r) = (u_1..u_k, v_1..v_r).
// u must carry the minimum of the union. Throws Error(kNotDisjoint) on shared
// elements and Error(kBadOrdering) if min(v) < min(u).
CycleForm paste_cycles(const CycleForm& u, const CycleForm& v);

// (i_1, i_2, ..., i_q) -> (i_1, i_q, i_{q-1}, ..., i_2). An involution.
CycleForm reverse_cycle(const CycleForm& u);

// a |<> b, degree m+n: i -> a(i)+n for i <= m, m+i -> b(i).
Permutation left_paste(const Permutation& a, const Permutation& b);

// a <>| b, degree m+n: i -> a(i) for i <= m, m+i -> b(i)+m.
Permutation right_paste(const Permutation& a, const Permutation& b);

// Image sequence reversed: a~(k) = a(m+1-k). An involution.
Permutation reverse_perm(const Permutation& a);

}  // namespace simperm
