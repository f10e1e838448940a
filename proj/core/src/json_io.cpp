#include "simperm/json_io.hpp"

#include "json.hpp"

namespace simperm {

std::string graph_to_json(const MarkovGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [from, to] : g.edges()) doc["edges"].push_back({from, to});
  return doc.dump();
}

std::string enumeration_to_json(int order, const std::vector<Permutation>& perms, std::optional<bool> oracle_match) {
  nlohmann::ordered_json doc;
  doc["order"] = order;
  doc["count"] = perms.size();
  doc["perms"] = nlohmann::ordered_json::array();
  for (const Permutation& p : perms) {
    doc["perms"].push_back(std::vector<int>(p.images().begin(), p.images().end()));
  }
  if (oracle_match) doc["oracle"] = *oracle_match ? "MATCH" : "MISMATCH";
  return doc.dump();
}

}  // namespace simperm
