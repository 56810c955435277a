#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hyperres/metric.hpp"
#include "hyperres/partition.hpp"
#include "hyperres/resolving.hpp"
#include "hyperres/transforms.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace hyperres {
namespace {

using testing::make;
using Pairs = std::vector<std::pair<VertexId, VertexId>>;

Pairs sorted_pairs(const Multigraph& g) {
  Pairs p = g.edges;
  for (auto& e : p) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<std::vector<std::string>> labelled_edges(const Hypergraph& h) {
  std::vector<std::vector<std::string>> out;
  for (const auto& e : h.edges()) {
    std::vector<std::string> row;
    for (VertexId v : e) row.push_back(h.label(v));
    out.push_back(row);
  }
  return out;
}

TEST(Primal, SingleEdgeIsTriangle) {
  auto g = primal_graph(Hypergraph::from_labels({{"a", "b", "c"}}));
  EXPECT_EQ(g.num_vertices, 3u);
  EXPECT_EQ(sorted_pairs(g), (Pairs{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Primal, FourVertexExample) {
  auto g = primal_graph(testing::four_vertex_example());
  EXPECT_EQ(sorted_pairs(g), (Pairs{{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
}

TEST(Primal, SizeOneEdgeIsLoop) {
  auto g = primal_graph(Hypergraph::from_labels({{"a"}}));
  EXPECT_EQ(g.edges, (Pairs{{0, 0}}));
}

TEST(Primal, SharedPairGivesParallelEdges) {
  auto g = primal_graph(testing::six_vertex_example());
  EXPECT_EQ(g.edges.size(), 18u);
  EXPECT_EQ(std::count(g.edges.begin(), g.edges.end(), std::make_pair(2u, 3u)), 2);
}

TEST(Middle, DualOfTwoEdgePathIsOneEdge) {
  auto m = middle_graph(dual(make(FamilyKind::kHyperpath, 2, 3)));
  EXPECT_EQ(labelled_edges(m), (std::vector<std::vector<std::string>>{{"e1", "e2"}}));
}

TEST(Middle, DualOfThreeCycleIsTriangle) {
  auto m = middle_graph(dual(make(FamilyKind::kHypercycle, 3, 3)));
  EXPECT_EQ(m.num_vertices(), 3u);
  EXPECT_EQ(m.edges(), (std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Middle, SingleEdgeIsTriangle) {
  auto m = middle_graph(Hypergraph::from_labels({{"a", "b", "c"}}));
  EXPECT_EQ(m.edges(), (std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Middle, IsolatedVertexKept) {
  auto m = middle_graph(Hypergraph::from_labels({{"a"}}));
  EXPECT_EQ(m.num_vertices(), 1u);
  EXPECT_EQ(m.edges(), (std::vector<VertexSet>{{0}}));
}

TEST(Dual, SingleEdge) {
  auto d = dual(Hypergraph::from_labels({{"a", "b", "c"}}));
  EXPECT_EQ(d.labels(), (std::vector<std::string>{"e1"}));
  EXPECT_EQ(d.edges(), (std::vector<VertexSet>{{0}, {0}, {0}}));
}

TEST(Dual, TwoEdgePath) {
  auto d = dual(make(FamilyKind::kHyperpath, 2, 3));
  EXPECT_EQ(d.labels(), (std::vector<std::string>{"e1", "e2"}));
  EXPECT_EQ(d.edges(), (std::vector<VertexSet>{{0}, {0}, {0, 1}, {1}, {1}}));
}

TEST(Dual, DoubleDualBuilds) {
  auto dd = dual(dual(make(FamilyKind::kHyperpath, 2, 3)));
  EXPECT_EQ(dd.num_vertices(), 5u);
  EXPECT_EQ(dd.num_edges(), 2u);
}

TEST(Dual, DistancesMatchMiddleGraph) {
  for (std::size_t k = 2; k <= 6; ++k) {
    for (auto kind : {FamilyKind::kHyperpath, FamilyKind::kHypercycle}) {
      if (kind == FamilyKind::kHypercycle && k < 3) continue;
      auto d = dual(make(kind, k, 3));
      EXPECT_EQ(distance_matrix(d).finite_table(),
                distance_matrix(middle_graph(d)).finite_table());
    }
  }
}

TEST(Dual, HyperpathAndHypercycleDimensions) {
  for (std::size_t k = 2; k <= 6; ++k) {
    auto d = dual(make(FamilyKind::kHyperpath, k, 3));
    EXPECT_EQ(metric_dimension(d).dimension, 1u) << k;
    EXPECT_EQ(partition_dimension(d).dimension, 2u) << k;
  }
  for (std::size_t k = 3; k <= 6; ++k) {
    auto d = dual(make(FamilyKind::kHypercycle, k, 3));
    EXPECT_EQ(metric_dimension(d).dimension, 2u) << k;
    EXPECT_EQ(partition_dimension(d).dimension, 3u) << k;
  }
}

TEST(Middle, PreservesDimensions) {
  std::mt19937 rng(41);
  for (int i = 0; i < 25; ++i) {
    auto h = testing::random_connected_sperner(rng, 9);
    auto m = middle_graph(h);
    EXPECT_EQ(metric_dimension(h).dimension, metric_dimension(m).dimension);
    EXPECT_EQ(partition_dimension(h).dimension, partition_dimension(m).dimension);
  }
}

}  // namespace
}  // namespace hyperres
