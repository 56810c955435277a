#include "hyperres/metric.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hyperres/error.hpp"

namespace hyperres {

int Distance::value() const {
  if (!finite()) throw std::logic_error("value() of an unreachable distance");
  return hops_;
}

Distance DistanceMatrix::operator()(VertexId u, VertexId v) const {
  return cells_.at(static_cast<std::size_t>(u) * size_ + v);
}

std::vector<int> DistanceMatrix::finite_table() const {
  if (!connected_) {
    throw Error(ErrorCode::kDisconnected, "hypergraph is not connected");
  }
  std::vector<int> table(cells_.size());
  std::transform(cells_.begin(), cells_.end(), table.begin(),
                 [](Distance d) { return d.value(); });
  return table;
}

std::vector<VertexSet> middle_adjacency(const Hypergraph& h) {
  std::vector<VertexSet> adj(h.num_vertices());
  for (const auto& edge : h.edges()) {
    for (VertexId u : edge) {
      for (VertexId v : edge) {
        if (u != v) adj[u].push_back(v);
      }
    }
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

// A path v, E_1, w_1, ..., E_l, u of length l visits l + 1 vertices with
// consecutive ones sharing an edge, so breadth-first layers over the
// middle graph give exactly the hypergraph distance.
DistanceMatrix distance_matrix(const Hypergraph& h) {
  const auto adj = middle_adjacency(h);
  const std::size_t m = h.num_vertices();
  DistanceMatrix d;
  d.size_ = m;
  d.cells_.assign(m * m, Distance::unreachable());
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < m; ++s) {
    Distance* row = d.cells_.data() + static_cast<std::size_t>(s) * m;
    row[s] = Distance(0);
    queue.assign(1, s);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      const int next = row[x].value() + 1;
      for (VertexId y : adj[x]) {
        if (!row[y].finite()) {
          row[y] = Distance(next);
          queue.push_back(y);
        }
      }
    }
  }
  d.connected_ = std::all_of(d.cells_.begin(), d.cells_.end(),
                             [](Distance x) { return x.finite(); });
  return d;
}

bool is_connected(const Hypergraph& h) {
  const auto adj = middle_adjacency(h);
  std::vector<bool> seen(h.num_vertices(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == h.num_vertices();
}

Distance distance_to_set(const DistanceMatrix& d, VertexId v,
                         std::span<const VertexId> set) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "distance to empty set");
  Distance best = Distance::unreachable();
  for (VertexId s : set) best = std::min(best, d(v, s));
  return best;
}

Representation representation(const DistanceMatrix& d, VertexId v,
                              std::span<const VertexSet> landmarks) {
  Representation r;
  r.reserve(landmarks.size());
  for (const auto& landmark : landmarks) {
    Distance x = distance_to_set(d, v, landmark);
    if (!x.finite()) {
      throw Error(ErrorCode::kDisconnected,
                  "landmark unreachable from vertex " + std::to_string(v));
    }
    r.push_back(x.value());
  }
  return r;
}

EccentricityReport eccentricity_and_diameter(const DistanceMatrix& d) {
  if (!d.connected()) {
    throw Error(ErrorCode::kDisconnected, "eccentricity needs connectivity");
  }
  EccentricityReport report;
  const auto m = static_cast<VertexId>(d.size());
  report.eccentricity.assign(m, 0);
  for (VertexId u = 0; u < m; ++u) {
    for (VertexId v = 0; v < m; ++v) {
      const int x = d(u, v).value();
      if (x > report.eccentricity[u]) report.eccentricity[u] = x;
      if (x > report.diameter) {
        report.diameter = x;
        report.diametral_pair = {u, v};
      }
    }
  }
  return report;
}

}  // namespace hyperres
