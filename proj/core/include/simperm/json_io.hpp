#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simperm/dynamics.hpp"
#include "simperm/permutation.hpp"

namespace simperm {

// {"vertices": n-1, "edges": [[k,l], ...]} with edges sorted.
std::string graph_to_json(const MarkovGraph& g);

// {"order": 6, "count": 12, "perms": [[6,4,5,1,2,3], ...]}, plus
// "oracle": "MATCH" | "MISMATCH" when an oracle verdict is supplied.
std::string enumeration_to_json(int order, const std::vector<Permutation>& perms,
                                std::optional<bool> oracle_match = std::nullopt);

}  // namespace simperm
