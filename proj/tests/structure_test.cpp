#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hyperres/error.hpp"
#include "hyperres/structure.hpp"
#include "support/fixtures.hpp"

namespace hyperres {
namespace {

using testing::make;

TEST(Structure, FourVertexExampleFlags) {
  auto r = analyze_structure(testing::four_vertex_example());
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.sperner);
  EXPECT_TRUE(r.linear);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_FALSE(r.uniform.has_value());
  EXPECT_EQ(r.degrees, (std::vector<std::size_t>{1, 1, 2, 1}));
}

TEST(Structure, HypercycleHasNoPendantEdges) {
  auto r = analyze_structure(make(FamilyKind::kHypercycle, 4, 3));
  ASSERT_TRUE(r.uniform.has_value());
  EXPECT_EQ(*r.uniform, 3u);
  EXPECT_TRUE(r.linear);
  EXPECT_TRUE(r.pendant_edges.empty());
}

TEST(Structure, SingleEdge) {
  auto h = Hypergraph::from_labels({{"a", "b", "c"}});
  auto r = analyze_structure(h);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.uniform, std::optional<std::size_t>(3));
  EXPECT_EQ(r.regular, std::optional<std::size_t>(1));
  EXPECT_EQ(r.pendant_edges, (std::vector<EdgeId>{0}));
  EXPECT_EQ(r.vacuous_pendant_edges, (std::vector<EdgeId>{0}));
}

TEST(Structure, DisconnectedIsReportedNotRejected) {
  auto h = Hypergraph::from_labels({{"a", "b"}, {"c", "d"}});
  auto r = analyze_structure(h);
  EXPECT_FALSE(r.connected);
  EXPECT_FALSE(r.family.has_value());
  EXPECT_THROW(classify_family(h), Error);
}

TEST(Structure, NonLinearDetected) {
  EXPECT_FALSE(is_linear(testing::six_vertex_example()));
  EXPECT_TRUE(is_linear(make(FamilyKind::kHyperstar, 3, 4)));
}

TEST(Structure, StarEdgesArePendant) {
  auto h = make(FamilyKind::kHyperstar, 4, 3);
  for (EdgeId e = 0; e < h.num_edges(); ++e) EXPECT_TRUE(is_pendant(h, e));
}

TEST(Structure, PathEndsArePendantVacuously) {
  // The middle edge meets its neighbours in disjoint vertices.
  auto h = make(FamilyKind::kHyperpath, 3, 3);
  auto r = analyze_structure(h);
  EXPECT_EQ(r.pendant_edges, (std::vector<EdgeId>{0, 2}));
  EXPECT_EQ(r.vacuous_pendant_edges, (std::vector<EdgeId>{0, 2}));
}

TEST(Structure, JointIsTheOnlyEdgeMeetingTheRest) {
  auto h = make(FamilyKind::kHypertree, 5, 3, 2);
  auto r = analyze_structure(h);
  EXPECT_TRUE(r.branches_complete);
  ASSERT_FALSE(r.branches.empty());
  for (const auto& b : r.branches) {
    EXPECT_FALSE(b.edges.empty());
    EXPECT_LT(b.edges.size(), h.num_edges());
    EXPECT_EQ(std::count(b.edges.begin(), b.edges.end(), b.joint), 1);
    for (EdgeId e : b.edges) {
      bool meets_rest = false;
      for (EdgeId f = 0; f < h.num_edges(); ++f) {
        if (std::count(b.edges.begin(), b.edges.end(), f) == 0 &&
            intersects(h.edge(e), h.edge(f))) {
          meets_rest = true;
        }
      }
      EXPECT_EQ(meets_rest, e == b.joint);
    }
  }
}

TEST(TwinClasses, FourVertexExample) {
  auto h = testing::four_vertex_example();
  auto t = twin_classes(h);
  ASSERT_EQ(t.classes.size(), 3u);
  EXPECT_EQ(t.n_value({0}), 1u);
  EXPECT_EQ(t.n_value({0, 1}), 0u);
  EXPECT_EQ(t.n_value({1}), 0u);
  EXPECT_EQ(t.classes[t.class_of[0]].members, (VertexSet{0, 1}));
  EXPECT_EQ(t.representatives, (VertexSet{0, 2, 3}));
  EXPECT_EQ(t.forced, (VertexSet{1}));
}

TEST(TwinClasses, SixVertexExample) {
  auto t = twin_classes(testing::six_vertex_example());
  EXPECT_EQ(t.n_value({0, 1}), 1u);
  EXPECT_EQ(t.n_value({1, 2}), 1u);
  EXPECT_EQ(t.n_value({0, 2}), 1u);
  for (EdgeId e = 0; e < 3; ++e) EXPECT_EQ(t.n_value({e}), 0u);
  EXPECT_EQ(t.excess_sum(), 3u);
}

TEST(TwinClasses, SingleEdgeIsOneClass) {
  auto t = twin_classes(Hypergraph::from_labels({{"a", "b", "c", "d", "e"}}));
  ASSERT_EQ(t.classes.size(), 1u);
  EXPECT_EQ(t.n_value({0}), 4u);
  EXPECT_EQ(t.largest_class(), 5u);
}

TEST(TwinClasses, InvariantsOnFamilies) {
  for (auto kind : {FamilyKind::kHyperpath, FamilyKind::kHypercycle,
                    FamilyKind::kHyperstar, FamilyKind::kHypertree}) {
    for (std::size_t k = 3; k <= 5; ++k) {
      auto h = make(kind, k, 4, 7);
      auto t = twin_classes(h);
      std::size_t total = 0;
      for (const auto& c : t.classes) {
        total += c.members.size();
        EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(),
                                       c.representative));
        for (VertexId v : c.members) {
          EXPECT_EQ(h.incident_edges(v), c.signature);
          EXPECT_EQ(h.degree(v), c.signature.size());
        }
      }
      EXPECT_EQ(total, h.num_vertices());
      EXPECT_EQ(t.excess_sum(), h.num_vertices() - t.representatives.size());
    }
  }
}

TEST(Classify, TwoEdgePathIsAlsoStarAndTree) {
  auto f = classify_family(make(FamilyKind::kHyperpath, 2, 3));
  EXPECT_EQ(f.kind, FamilyKind::kHyperpath);
  EXPECT_TRUE(f.has(FamilyKind::kHyperpath));
  EXPECT_TRUE(f.has(FamilyKind::kHyperstar));
  EXPECT_TRUE(f.has(FamilyKind::kHypertree));
  EXPECT_FALSE(f.has(FamilyKind::kHypercycle));
}

TEST(Classify, Hypercycle) {
  auto f = classify_family(make(FamilyKind::kHypercycle, 4, 3));
  EXPECT_EQ(f.kind, FamilyKind::kHypercycle);
  EXPECT_EQ(f.k, 4u);
  EXPECT_EQ(f.n, std::optional<std::size_t>(3));
  EXPECT_EQ(f.edge_order.size(), 4u);
  EXPECT_FALSE(f.has(FamilyKind::kHypertree));
}

TEST(Classify, HyperstarCenter) {
  auto h = make(FamilyKind::kHyperstar, 3, 3);
  auto f = classify_family(h);
  EXPECT_EQ(f.kind, FamilyKind::kHyperstar);
  EXPECT_EQ(f.center, (VertexSet{h.find("v1")}));
  EXPECT_TRUE(f.has(FamilyKind::kHypertree));
  EXPECT_FALSE(f.has(FamilyKind::kHypercycle));
}

TEST(Classify, ThreeCycleOfThreeEdges) {
  auto f = classify_family(make(FamilyKind::kHypercycle, 3, 3));
  EXPECT_EQ(f.kind, FamilyKind::kHypercycle);
}

TEST(Classify, SingleEdge) {
  auto f = classify_family(Hypergraph::from_labels({{"a", "b"}}));
  EXPECT_EQ(f.kind, FamilyKind::kSingleEdge);
  EXPECT_TRUE(f.has(FamilyKind::kHyperpath));
}

TEST(Classify, NonLinearCycleAndOther) {
  auto f = classify_family(testing::six_vertex_example());
  EXPECT_EQ(f.kind, FamilyKind::kHypercycle);
  auto g = classify_family(Hypergraph::from_labels(
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}}));
  EXPECT_EQ(g.kind, FamilyKind::kOther);
}

TEST(Classify, CapExceeded) {
  try {
    classify_family(make(FamilyKind::kHyperpath, 6, 3), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(Classify, RoundTripOnGenerators) {
  for (auto kind : {FamilyKind::kHyperpath, FamilyKind::kHypercycle,
                    FamilyKind::kHyperstar, FamilyKind::kHypertree}) {
    for (std::size_t k = 3; k <= 7; ++k) {
      for (std::size_t n = 2; n <= 5; ++n) {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
          auto h = make(kind, k, n, seed);
          EXPECT_TRUE(classify_family(h).has(kind))
              << to_string(kind) << " k=" << k << " n=" << n;
          auto r = analyze_structure(h);
          EXPECT_TRUE(r.connected);
          EXPECT_TRUE(r.sperner);
          EXPECT_TRUE(r.linear);
          EXPECT_EQ(r.uniform, std::optional<std::size_t>(n));
        }
      }
    }
  }
}

}  // namespace
}  // namespace hyperres
