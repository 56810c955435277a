#include "hyperres/transforms.hpp"

#include <algorithm>
#include <string>

#include "hyperres/metric.hpp"

namespace hyperres {

Multigraph primal_graph(const Hypergraph& h) {
  Multigraph g;
  g.num_vertices = h.num_vertices();
  for (const auto& edge : h.edges()) {
    if (edge.size() == 1) {
      g.edges.emplace_back(edge[0], edge[0]);
      continue;
    }
    for (std::size_t i = 0; i < edge.size(); ++i) {
      for (std::size_t j = i + 1; j < edge.size(); ++j) {
        g.edges.emplace_back(edge[i], edge[j]);
      }
    }
  }
  return g;
}

Hypergraph middle_graph(const Hypergraph& h) {
  const auto adj = middle_adjacency(h);
  std::vector<VertexSet> edges;
  for (VertexId u = 0; u < adj.size(); ++u) {
    if (adj[u].empty()) edges.push_back({u});
    for (VertexId v : adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return Hypergraph::from_ids(h.labels(), std::move(edges));
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::string> labels;
  labels.reserve(h.num_edges());
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    labels.push_back("e" + std::to_string(j + 1));
  }
  std::vector<VertexSet> edges;
  edges.reserve(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    const auto& incident = h.incident_edges(v);
    edges.emplace_back(incident.begin(), incident.end());
  }
  return Hypergraph::from_ids(std::move(labels), std::move(edges),
                              BuildOptions{.allow_non_sperner = true});
}

}  // namespace hyperres
