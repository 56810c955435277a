#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hyperres/hypergraph.hpp"
#include "hyperres/limits.hpp"
#include "hyperres/metric.hpp"
#include "hyperres/resolving.hpp"

namespace hyperres {

using Partition = std::vector<VertexSet>;

struct PartitionCertificate {
  Partition classes;
  // Indexed by vertex id; coordinate i is the distance to classes[i].
  std::vector<Representation> representations;
  bool valid = false;
  // First same-class pair (u < v) with equal representations.
  std::optional<std::pair<VertexId, VertexId>> conflict;
};

/// Checks a vertex partition. Only same-class pairs can collide, since two
/// vertices in different classes differ at their own class coordinate.
/// Throws kNotAPartition and kDisconnected.
PartitionCertificate is_resolving_partition(const Hypergraph& h,
                                            const Partition& classes);
PartitionCertificate is_resolving_partition(const Hypergraph& h,
                                            const DistanceMatrix& d,
                                            const Partition& classes);

/// λ + 1 with λ the largest twin class; m for a single edge. Requires a
/// connected Sperner hypergraph (kDisconnected, kNotSperner).
std::size_t pd_lower_bound(const Hypergraph& h);

struct PartitionDimensionResult {
  std::size_t dimension = 0;
  PartitionCertificate witness;
};

/// Exact partition dimension.
///
/// Enumerates unordered partitions into exactly t classes as restricted
/// growth strings, t increasing from the lower bound. Vertices at equal
/// distance from every third vertex must sit in different classes, which
/// prunes the enumeration. When `known_basis` holds a valid minimum
/// resolving set W, the search stops below |W| + 1 and falls back to the
/// partition of singletons of W plus V minus W.
///
/// Throws kDisconnected, and kCapExceeded when |V| is above
/// `limits.max_partition_vertices` (or 64).
PartitionDimensionResult partition_dimension(
    const Hypergraph& h, const SolverLimits& limits = {},
    const ResolvingSetCertificate* known_basis = nullptr);

}  // namespace hyperres
