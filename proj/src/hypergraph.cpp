#include "hyperres/hypergraph.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "hyperres/error.hpp"

namespace hyperres {
namespace {

void check_sperner(const std::vector<VertexSet>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i == j || edges[i].size() > edges[j].size()) continue;
      // Equal edges are reported once, as (earlier, later).
      if (edges[i] == edges[j] && i > j) continue;
      if (std::includes(edges[j].begin(), edges[j].end(), edges[i].begin(),
                        edges[i].end())) {
        throw Error(ErrorCode::kSpernerViolation,
                    "edge " + std::to_string(i + 1) + " is contained in edge " +
                        std::to_string(j + 1));
      }
    }
  }
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> labels,
                       std::vector<VertexSet> edges)
    : labels_(std::move(labels)),
      edges_(std::move(edges)),
      incidence_(labels_.size()) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    for (VertexId v : edges_[e]) incidence_[v].push_back(e);
  }
}

Hypergraph Hypergraph::from_labels(
    const std::vector<std::vector<std::string>>& edges, BuildOptions options) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<VertexSet> id_edges;
  id_edges.reserve(edges.size());
  for (const auto& edge : edges) {
    VertexSet ids_in_edge;
    ids_in_edge.reserve(edge.size());
    for (const auto& label : edge) {
      auto [it, inserted] =
          ids.try_emplace(label, static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(label);
      ids_in_edge.push_back(it->second);
    }
    id_edges.push_back(std::move(ids_in_edge));
  }
  return from_ids(std::move(labels), std::move(id_edges), options);
}

Hypergraph Hypergraph::from_ids(std::vector<std::string> labels,
                                std::vector<VertexSet> edges,
                                BuildOptions options) {
  if (edges.empty()) {
    throw Error(ErrorCode::kEmptyFamily, "hypergraph needs at least one edge");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel, "label '" + label + "'");
    }
  }
  const std::size_t m = labels.size();
  std::vector<bool> covered(m, false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& edge = edges[i];
    if (edge.empty()) {
      throw Error(ErrorCode::kEmptyEdge,
                  "edge " + std::to_string(i + 1) + " is empty");
    }
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    for (VertexId v : edge) {
      if (v >= m) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "edge " + std::to_string(i + 1) + " names vertex id " +
                        std::to_string(v));
      }
      covered[v] = true;
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (!covered[v]) {
      throw Error(ErrorCode::kUncoveredVertex,
                  "vertex '" + labels[v] + "' lies in no edge");
    }
  }
  if (!options.allow_non_sperner) check_sperner(edges);
  return Hypergraph(std::move(labels), std::move(edges));
}

VertexId Hypergraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return static_cast<VertexId>(std::distance(labels_.begin(), it));
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace hyperres
