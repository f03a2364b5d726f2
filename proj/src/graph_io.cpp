#include <stdexcept>

#include "json.hpp"
#include "matchlab/graph.hpp"

namespace matchlab {

std::string graph_to_json(const BipartiteGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  auto rows = nlohmann::ordered_json::array();
  for (int j = 0; j < g.n(); ++j) {
    auto row = nlohmann::ordered_json::array();
    for (int v : g.neighbors(j)) row.push_back(v + 1);
    rows.push_back(std::move(row));
  }
  doc["adjacency"] = std::move(rows);
  return doc.dump();
}

BipartiteGraph graph_from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.contains("n") || !doc.contains("adjacency")) {
    throw std::invalid_argument("graph JSON must contain \"n\" and \"adjacency\"");
  }
  const int n = doc.at("n").get<int>();
  std::vector<std::vector<int>> adjacency;
  for (const auto& row : doc.at("adjacency")) {
    std::vector<int> neighbors;
    for (const auto& v : row) {
      const int idx = v.get<int>();
      if (idx < 1 || idx > n) throw std::invalid_argument("neighbor index out of range");
      neighbors.push_back(idx - 1);
    }
    adjacency.push_back(std::move(neighbors));
  }
  return BipartiteGraph::from_adjacency(n, std::move(adjacency));
}

}  // namespace matchlab
