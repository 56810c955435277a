#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hyperres/hypergraph.hpp"

namespace hyperres {

/// Hop count between two vertices, or the unreachable marker.
///
/// `value()` on an unreachable distance throws, so the marker can never leak
/// into arithmetic. Unreachable orders after every finite distance.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(int hops) : hops_(hops) {}

  static constexpr Distance unreachable() { return Distance{}; }

  constexpr bool finite() const { return hops_ >= 0; }
  int value() const;

  friend constexpr bool operator==(Distance, Distance) = default;
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.finite() != b.finite()) {
      return a.finite() ? std::strong_ordering::less
                        : std::strong_ordering::greater;
    }
    return a.hops_ <=> b.hops_;
  }

 private:
  int hops_ = -1;
};

/// All-pairs shortest-path lengths over vertex-edge alternating paths.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t size() const { return size_; }
  Distance operator()(VertexId u, VertexId v) const;
  bool connected() const { return connected_; }

  // Row-major table of plain hop counts. Throws kDisconnected when any pair
  // is unreachable.
  std::vector<int> finite_table() const;

 private:
  friend DistanceMatrix distance_matrix(const Hypergraph& h);

  std::size_t size_ = 0;
  bool connected_ = true;
  std::vector<Distance> cells_;
};

// Simple-graph adjacency induced by the edges (the middle graph), sorted.
std::vector<VertexSet> middle_adjacency(const Hypergraph& h);

DistanceMatrix distance_matrix(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

// min over s in `set` of d(v, s). Throws kEmptySet.
Distance distance_to_set(const DistanceMatrix& d, VertexId v,
                         std::span<const VertexId> set);

using Representation = std::vector<int>;

/// r(v | L): distance from `v` to each landmark set in order. Singleton
/// landmarks model resolving sets, partition classes model partitions.
/// Throws kEmptySet for an empty landmark and kDisconnected when a
/// coordinate is unreachable.
Representation representation(const DistanceMatrix& d, VertexId v,
                              std::span<const VertexSet> landmarks);

struct EccentricityReport {
  std::vector<int> eccentricity;
  int diameter = 0;
  std::pair<VertexId, VertexId> diametral_pair{0, 0};
};

EccentricityReport eccentricity_and_diameter(const DistanceMatrix& d);

}  // namespace hyperres
