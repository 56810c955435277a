#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperres {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

struct BuildOptions {
  // Duals and other derived hypergraphs may repeat or nest edges.
  bool allow_non_sperner = false;
};

/// Finite hypergraph with labelled vertices and an ordered edge family.
///
/// Vertex ids are dense (0..m-1) and index into `labels()`. Edges keep their
/// input order and may repeat only when built with `allow_non_sperner`.
/// Every vertex lies in at least one edge. Instances are immutable.
class Hypergraph {
 public:
  /// Builds from edges given as label lists. Vertex ids follow the order in
  /// which labels first appear; repeated labels inside one edge collapse.
  static Hypergraph from_labels(
      const std::vector<std::vector<std::string>>& edges,
      BuildOptions options = {});

  /// Builds from an explicit label table and id-based edges.
  static Hypergraph from_ids(std::vector<std::string> labels,
                             std::vector<VertexSet> edges,
                             BuildOptions options = {});

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }

  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(EdgeId e) const { return edges_.at(e); }

  // Sorted ids of the edges containing `v`.
  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    return incidence_.at(v);
  }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

  // Lookup by label; returns num_vertices() when absent.
  VertexId find(const std::string& label) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Hypergraph(std::vector<std::string> labels, std::vector<VertexSet> edges);

  std::vector<std::string> labels_;
  std::vector<VertexSet> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Vertices shared by two sorted sets.
VertexSet intersect(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);

}  // namespace hyperres
