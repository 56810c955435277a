#pragma once

#include <cstddef>
#include <cstdint>

namespace hyperres {

// Size caps for the exact solvers. Above a cap the solver throws
// kCapExceeded instead of running for an unbounded time.
struct SolverLimits {
  // |R(H)| bound for the metric dimension search.
  std::size_t max_representatives = 24;
  // |V(H)| bound for the partition dimension search.
  std::size_t max_partition_vertices = 15;
  // Candidate subsets examined when counting minimum bases.
  std::uint64_t max_basis_candidates = 5'000'000;

  // Applies one size cap to both searches, as `--cap` and HYPERRES_CAP do.
  static SolverLimits with_size_cap(std::size_t cap) {
    SolverLimits limits;
    limits.max_representatives = cap;
    limits.max_partition_vertices = cap;
    return limits;
  }
};

}  // namespace hyperres
