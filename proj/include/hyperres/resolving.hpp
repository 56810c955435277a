#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperres/hypergraph.hpp"
#include "hyperres/limits.hpp"
#include "hyperres/metric.hpp"

namespace hyperres {

struct ResolvingSetCertificate {
  // Landmarks in the caller's order.
  std::vector<VertexId> landmarks;
  // Indexed by vertex id.
  std::vector<Representation> representations;
  bool valid = false;
  // Lexicographically first pair (u < v) with equal representations.
  std::optional<std::pair<VertexId, VertexId>> conflict;
};

/// Checks whether `landmarks` resolves H. Throws kDisconnected and
/// kVertexOutOfRange.
ResolvingSetCertificate is_resolving_set(const Hypergraph& h,
                                         std::span<const VertexId> landmarks);
ResolvingSetCertificate is_resolving_set(const Hypergraph& h,
                                         const DistanceMatrix& d,
                                         std::span<const VertexId> landmarks);

// Sum of n(.) over all twin classes.
std::size_t dim_lower_bound(const Hypergraph& h);

struct MetricDimensionResult {
  std::size_t dimension = 0;
  ResolvingSetCertificate basis;
};

/// Exact metric dimension.
///
/// Twin vertices are interchangeable: a resolving set holds all but at most
/// one member of every twin class, and swapping a member for an excluded
/// twin keeps it resolving. Hence some basis contains every non-
/// representative vertex, and it suffices to search sets F ∪ S with F the
/// forced vertices and S ⊆ R(H), smallest S first, lexicographic within a
/// size. The returned basis is the first hit in that order.
///
/// Throws kDisconnected, and kCapExceeded when |R(H)| is above
/// `limits.max_representatives`.
MetricDimensionResult metric_dimension(const Hypergraph& h,
                                       const SolverLimits& limits = {});

/// Number of distinct minimum resolving sets.
///
/// Each S ⊆ R(H) of size dim - |F| that completes F to a resolving set
/// stands for the bases that drop one member from every class outside S;
/// by the swap argument all of those resolve, and distinct S give disjoint
/// families, so the count is the sum over such S of the product of the
/// sizes of the classes not in S.
///
/// Throws kDisconnected, and kCapExceeded when the number of candidate
/// subsets is above `limits.max_basis_candidates`.
std::uint64_t count_minimum_bases(const Hypergraph& h,
                                  const SolverLimits& limits = {});

}  // namespace hyperres
