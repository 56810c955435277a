#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "hyperres/hypergraph.hpp"

namespace hyperres {

enum class FamilyKind {
  kSingleEdge,
  kHyperpath,
  kHypercycle,
  kHyperstar,
  kHypertree,
  kOther,
};

std::string_view to_string(FamilyKind kind);

struct FamilyDescriptor {
  // Most specific match: single-edge, then hypercycle > hyperpath >
  // hyperstar > hypertree > other.
  FamilyKind kind = FamilyKind::kOther;
  std::set<FamilyKind> flags;
  std::size_t k = 0;
  std::optional<std::size_t> n;
  // Common intersection of all edges when the hyperstar flag is set.
  VertexSet center;
  // Edge sequence realizing the path or cycle pattern, when present.
  std::vector<EdgeId> edge_order;

  bool has(FamilyKind f) const { return flags.count(f) != 0; }
};

struct Branch {
  std::vector<EdgeId> edges;
  EdgeId joint = 0;
};

struct StructureOptions {
  std::size_t branch_edge_cap = 12;
  std::size_t family_edge_cap = 16;
};

struct StructureReport {
  bool connected = false;
  bool sperner = false;
  bool linear = false;
  std::optional<std::size_t> uniform;
  std::optional<std::size_t> regular;
  std::size_t rank = 0;
  std::vector<std::size_t> degrees;
  std::vector<EdgeId> pendant_edges;
  // Pendant edges that meet at most one other edge, so the pendant
  // condition holds vacuously.
  std::vector<EdgeId> vacuous_pendant_edges;
  std::vector<Branch> branches;
  // False when the edge count was too large for the exhaustive branch scan.
  bool branches_complete = true;
  // Absent when H is disconnected or exceeds the recognition cap.
  std::optional<FamilyDescriptor> family;
};

StructureReport analyze_structure(const Hypergraph& h,
                                  const StructureOptions& options = {});

bool is_sperner(const Hypergraph& h);
bool is_linear(const Hypergraph& h);

// Pendant test: every two other edges meeting `e` meet it in overlapping
// sets. Vacuously true when at most one other edge meets `e`.
bool is_pendant(const Hypergraph& h, EdgeId e);

/// Vertices grouped by incidence signature, the set of edges they lie in.
struct TwinClass {
  std::vector<EdgeId> signature;
  VertexSet members;
  VertexId representative = 0;

  // n(i_1, ..., i_d) = |C| - 1.
  std::size_t excess() const { return members.size() - 1; }
};

struct TwinClassPartition {
  // Sorted by signature.
  std::vector<TwinClass> classes;
  // vertex id -> index into `classes`.
  std::vector<std::size_t> class_of;
  // R(H): one representative per class (lowest id), sorted.
  VertexSet representatives;
  // V(H) minus R(H), sorted.
  VertexSet forced;

  // n(signature); zero for signatures with no vertices.
  std::size_t n_value(const std::vector<EdgeId>& signature) const;
  // Sum of n over all classes.
  std::size_t excess_sum() const { return forced.size(); }
  // Largest class size.
  std::size_t largest_class() const;
};

TwinClassPartition twin_classes(const Hypergraph& h);

/// Recognizes path, cycle, star and tree patterns. Throws kDisconnected for
/// disconnected input and kCapExceeded when the edge count is above
/// `edge_cap` (the tree test enumerates edge subsets).
FamilyDescriptor classify_family(const Hypergraph& h,
                                 std::size_t edge_cap = 16);

}  // namespace hyperres
