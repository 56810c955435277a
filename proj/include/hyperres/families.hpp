#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "hyperres/hypergraph.hpp"
#include "hyperres/structure.hpp"

namespace hyperres {

struct GeneratorSpec {
  FamilyKind kind = FamilyKind::kHyperpath;
  std::size_t k = 1;
  std::size_t n = 2;
  // Hypertrees only.
  std::uint64_t seed = 0;
  // Hyperstars only; 1 is the only supported value.
  std::size_t center_size = 1;

  std::string describe() const;
};

/// n-uniform linear members of the named families. Throws kInvalidSpec.
///
/// hyperpath(k, n): consecutive edges share one vertex.
/// hypercycle(k, n): as a path, plus edge k meets edge 1; k >= 3.
/// hyperstar(k, n): every edge holds the center and n - 1 own leaves.
/// hypertree(k, n, seed): each new edge hangs n - 1 fresh vertices off one
/// uniformly drawn existing vertex.
Hypergraph generate(const GeneratorSpec& spec);

/// Closed-form metric dimension. nullopt when the family has no closed form
/// for these parameters; throws kHypothesisNotMet when the governing
/// theorem's hypothesis fails (the message names it).
std::optional<std::size_t> predicted_dim(const GeneratorSpec& spec);

/// Closed-form partition dimension for hyperpaths and hypercycles; nullopt
/// for other families.
std::optional<std::size_t> predicted_pd(const GeneratorSpec& spec);

}  // namespace hyperres
