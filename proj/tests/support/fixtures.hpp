#pragma once

#include <string>
#include <vector>

#include "hyperres/families.hpp"
#include "hyperres/hypergraph.hpp"

namespace hyperres::testing {

// Two edges sharing v3.
inline Hypergraph four_vertex_example() {
  return Hypergraph::from_labels({{"v1", "v2", "v3"}, {"v3", "v4"}});
}

// Three 4-vertex edges, each pair sharing two vertices.
inline Hypergraph six_vertex_example() {
  return Hypergraph::from_labels({{"v1", "v2", "v3", "v4"},
                                  {"v3", "v4", "v5", "v6"},
                                  {"v1", "v2", "v5", "v6"}});
}

// Edges {v1..v7} and {v6..v11}.
inline Hypergraph eleven_vertex_example() {
  std::vector<std::string> first;
  std::vector<std::string> second;
  for (int i = 1; i <= 7; ++i) first.push_back("v" + std::to_string(i));
  for (int i = 6; i <= 11; ++i) second.push_back("v" + std::to_string(i));
  return Hypergraph::from_labels({first, second});
}

inline Hypergraph make(FamilyKind kind, std::size_t k, std::size_t n,
                       std::uint64_t seed = 0) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.k = k;
  spec.n = n;
  spec.seed = seed;
  return generate(spec);
}

inline VertexId id(const Hypergraph& h, const std::string& label) {
  return h.find(label);
}

}  // namespace hyperres::testing
