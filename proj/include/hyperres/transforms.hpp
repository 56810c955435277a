#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperres/hypergraph.hpp"

namespace hyperres {

// Graph with loops and parallel edges; a loop is the pair (x, x).
struct Multigraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

// Clique expansion: one pair per vertex pair per shared edge, plus a loop
// for each edge of size one.
Multigraph primal_graph(const Hypergraph& h);

// Simplified primal graph as a 2-uniform hypergraph on the same vertex ids
// and labels. Vertices left without neighbours keep a singleton edge so the
// edge family still covers V(H).
Hypergraph middle_graph(const Hypergraph& h);

// Vertices e1..ek (vertex id j is edge j of H), one edge per vertex of H
// holding the edges that contain it. Built with the Sperner gate off.
Hypergraph dual(const Hypergraph& h);

}  // namespace hyperres
