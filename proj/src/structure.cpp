#include "hyperres/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "hyperres/error.hpp"
#include "hyperres/metric.hpp"

namespace hyperres {
namespace {

using EdgeMask = std::uint32_t;

// Above this edge count the branch scan is skipped.
constexpr std::size_t kBranchScanMaxEdges = 20;

std::vector<EdgeMask> intersection_masks(const Hypergraph& h) {
  const std::size_t k = h.num_edges();
  std::vector<EdgeMask> masks(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (intersects(h.edge(i), h.edge(j))) {
        masks[i] |= EdgeMask{1} << j;
        masks[j] |= EdgeMask{1} << i;
      }
    }
  }
  return masks;
}

bool mask_connected(const std::vector<EdgeMask>& adj, EdgeMask subset) {
  if (subset == 0) return false;
  EdgeMask reached = subset & (~subset + 1);
  EdgeMask frontier = reached;
  while (frontier != 0) {
    EdgeMask next = 0;
    for (EdgeMask f = frontier; f != 0; f &= f - 1) {
      next |= adj[std::countr_zero(f)] & subset;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == subset;
}

// Three pairwise intersections admit distinct representatives.
bool has_distinct_representatives(const VertexSet& a, const VertexSet& b,
                                  const VertexSet& c) {
  for (VertexId x : a) {
    for (VertexId y : b) {
      if (y == x) continue;
      for (VertexId z : c) {
        if (z != x && z != y) return true;
      }
    }
  }
  return false;
}

// The edges in `subset` realize the cyclic pattern: E_i meets E_j exactly
// when they are neighbours on the cycle, and for three edges the meeting
// points are distinct (otherwise the three edges form a star).
bool is_cycle_pattern(const Hypergraph& h, const std::vector<EdgeMask>& adj,
                      EdgeMask subset) {
  const int size = std::popcount(subset);
  if (size < 3) return false;
  for (EdgeMask s = subset; s != 0; s &= s - 1) {
    if (std::popcount(adj[std::countr_zero(s)] & subset) != 2) return false;
  }
  if (!mask_connected(adj, subset)) return false;
  if (size == 3) {
    EdgeId e[3];
    int i = 0;
    for (EdgeMask s = subset; s != 0; s &= s - 1) e[i++] = std::countr_zero(s);
    return has_distinct_representatives(intersect(h.edge(e[0]), h.edge(e[1])),
                                        intersect(h.edge(e[1]), h.edge(e[2])),
                                        intersect(h.edge(e[2]), h.edge(e[0])));
  }
  return true;
}

std::vector<EdgeId> walk(const std::vector<EdgeMask>& adj, EdgeId start) {
  std::vector<EdgeId> order{start};
  EdgeMask visited = EdgeMask{1} << start;
  EdgeId current = start;
  while (true) {
    EdgeMask next = adj[current] & ~visited;
    if (next == 0) break;
    current = std::countr_zero(next);
    visited |= EdgeMask{1} << current;
    order.push_back(current);
  }
  return order;
}

std::vector<Branch> find_branches(const Hypergraph& h,
                                  const std::vector<EdgeMask>& adj,
                                  std::size_t size_cap) {
  const std::size_t k = h.num_edges();
  const EdgeMask all = k == 32 ? ~EdgeMask{0} : (EdgeMask{1} << k) - 1;
  std::vector<Branch> branches;
  for (EdgeMask p = 1; p < all; ++p) {
    if (static_cast<std::size_t>(std::popcount(p)) > size_cap) continue;
    if (!mask_connected(adj, p)) continue;
    const EdgeMask outside = all & ~p;
    EdgeMask outward = 0;
    for (EdgeMask s = p; s != 0; s &= s - 1) {
      const int e = std::countr_zero(s);
      if (adj[e] & outside) outward |= EdgeMask{1} << e;
    }
    if (std::popcount(outward) != 1) continue;
    const EdgeId joint = std::countr_zero(outward);
    std::vector<VertexSet> meets;
    for (EdgeMask s = adj[joint] & outside; s != 0; s &= s - 1) {
      meets.push_back(intersect(h.edge(joint), h.edge(std::countr_zero(s))));
    }
    bool ok = true;
    for (std::size_t i = 0; i < meets.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < meets.size() && ok; ++j) {
        ok = intersects(meets[i], meets[j]);
      }
    }
    if (!ok) continue;
    Branch b;
    b.joint = joint;
    for (EdgeMask s = p; s != 0; s &= s - 1) b.edges.push_back(std::countr_zero(s));
    branches.push_back(std::move(b));
  }
  return branches;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kSingleEdge: return "single-edge";
    case FamilyKind::kHyperpath: return "hyperpath";
    case FamilyKind::kHypercycle: return "hypercycle";
    case FamilyKind::kHyperstar: return "hyperstar";
    case FamilyKind::kHypertree: return "hypertree";
    case FamilyKind::kOther: return "other";
  }
  return "other";
}

bool is_sperner(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && std::includes(edges[j].begin(), edges[j].end(),
                                  edges[i].begin(), edges[i].end())) {
        return false;
      }
    }
  }
  return true;
}

bool is_linear(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (intersect(edges[i], edges[j]).size() > 1) return false;
    }
  }
  return true;
}

bool is_pendant(const Hypergraph& h, EdgeId e) {
  std::vector<VertexSet> meets;
  for (EdgeId i = 0; i < h.num_edges(); ++i) {
    if (i == e) continue;
    auto common = intersect(h.edge(e), h.edge(i));
    if (!common.empty()) meets.push_back(std::move(common));
  }
  for (std::size_t i = 0; i < meets.size(); ++i) {
    for (std::size_t j = i + 1; j < meets.size(); ++j) {
      if (!intersects(meets[i], meets[j])) return false;
    }
  }
  return true;
}

StructureReport analyze_structure(const Hypergraph& h,
                                  const StructureOptions& options) {
  StructureReport r;
  const std::size_t m = h.num_vertices();
  const std::size_t k = h.num_edges();
  r.connected = is_connected(h);
  r.sperner = is_sperner(h);
  r.linear = is_linear(h);

  for (const auto& edge : h.edges()) r.rank = std::max(r.rank, edge.size());
  const bool uniform = std::all_of(h.edges().begin(), h.edges().end(),
                                   [&](const VertexSet& e) { return e.size() == r.rank; });
  if (uniform) r.uniform = r.rank;

  r.degrees.resize(m);
  for (VertexId v = 0; v < m; ++v) r.degrees[v] = h.degree(v);
  if (std::adjacent_find(r.degrees.begin(), r.degrees.end(),
                         std::not_equal_to<>()) == r.degrees.end()) {
    r.regular = r.degrees.front();
  }

  for (EdgeId e = 0; e < k; ++e) {
    if (!is_pendant(h, e)) continue;
    r.pendant_edges.push_back(e);
    std::size_t meeting = 0;
    for (EdgeId i = 0; i < k; ++i) {
      if (i != e && intersects(h.edge(e), h.edge(i))) ++meeting;
    }
    if (meeting <= 1) r.vacuous_pendant_edges.push_back(e);
  }

  if (k <= kBranchScanMaxEdges) {
    r.branches = find_branches(h, intersection_masks(h), options.branch_edge_cap);
  } else {
    r.branches_complete = false;
  }

  if (r.connected && k <= options.family_edge_cap) {
    r.family = classify_family(h, options.family_edge_cap);
  }
  return r;
}

std::size_t TwinClassPartition::n_value(
    const std::vector<EdgeId>& signature) const {
  for (const auto& c : classes) {
    if (c.signature == signature) return c.excess();
  }
  return 0;
}

std::size_t TwinClassPartition::largest_class() const {
  std::size_t best = 0;
  for (const auto& c : classes) best = std::max(best, c.members.size());
  return best;
}

TwinClassPartition twin_classes(const Hypergraph& h) {
  std::map<std::vector<EdgeId>, VertexSet> groups;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    groups[h.incident_edges(v)].push_back(v);
  }
  TwinClassPartition p;
  p.class_of.resize(h.num_vertices());
  for (auto& [signature, members] : groups) {
    TwinClass c;
    c.signature = signature;
    c.members = std::move(members);
    c.representative = c.members.front();
    for (VertexId v : c.members) {
      p.class_of[v] = p.classes.size();
      if (v != c.representative) p.forced.push_back(v);
    }
    p.representatives.push_back(c.representative);
    p.classes.push_back(std::move(c));
  }
  std::sort(p.representatives.begin(), p.representatives.end());
  std::sort(p.forced.begin(), p.forced.end());
  return p;
}

FamilyDescriptor classify_family(const Hypergraph& h, std::size_t edge_cap) {
  const std::size_t k = h.num_edges();
  if (k > edge_cap || k > 31) {
    throw Error(ErrorCode::kCapExceeded,
                "family recognition limited to " +
                    std::to_string(std::min<std::size_t>(edge_cap, 31)) +
                    " edges, got " + std::to_string(k));
  }
  if (!is_connected(h)) {
    throw Error(ErrorCode::kDisconnected, "family recognition needs connectivity");
  }

  FamilyDescriptor f;
  f.k = k;
  const std::size_t size0 = h.edge(0).size();
  if (std::all_of(h.edges().begin(), h.edges().end(),
                  [&](const VertexSet& e) { return e.size() == size0; })) {
    f.n = size0;
  }

  if (k == 1) {
    f.kind = FamilyKind::kSingleEdge;
    f.flags = {FamilyKind::kSingleEdge, FamilyKind::kHyperpath,
               FamilyKind::kHypertree};
    f.edge_order = {0};
    return f;
  }

  const auto adj = intersection_masks(h);
  std::vector<int> degree(k);
  for (std::size_t e = 0; e < k; ++e) degree[e] = std::popcount(adj[e]);
  const EdgeMask all = (EdgeMask{1} << k) - 1;

  // Connected H has a connected intersection graph, so a path pattern is
  // max degree 2 with k - 1 adjacencies and a cycle pattern is 2-regular.
  const int adjacency_count =
      std::accumulate(degree.begin(), degree.end(), 0) / 2;
  const bool max_two = std::all_of(degree.begin(), degree.end(),
                                   [](int d) { return d <= 2; });
  if (max_two && adjacency_count == static_cast<int>(k) - 1) {
    f.flags.insert(FamilyKind::kHyperpath);
    const auto end = std::find(degree.begin(), degree.end(), 1);
    f.edge_order = walk(adj, static_cast<EdgeId>(end - degree.begin()));
  }
  if (is_cycle_pattern(h, adj, all)) {
    f.flags.insert(FamilyKind::kHypercycle);
    f.edge_order = walk(adj, 0);
  }

  VertexSet center = intersect(h.edge(0), h.edge(1));
  bool star = !center.empty();
  for (std::size_t i = 0; i < k && star; ++i) {
    for (std::size_t j = i + 1; j < k && star; ++j) {
      star = intersect(h.edge(i), h.edge(j)) == center;
    }
  }
  if (star) {
    f.flags.insert(FamilyKind::kHyperstar);
    f.center = std::move(center);
  }

  bool tree = true;
  for (EdgeMask s = 1; s <= all && tree; ++s) {
    if (std::popcount(s) >= 3 && is_cycle_pattern(h, adj, s)) tree = false;
  }
  if (tree) f.flags.insert(FamilyKind::kHypertree);

  for (FamilyKind kind : {FamilyKind::kHypercycle, FamilyKind::kHyperpath,
                          FamilyKind::kHyperstar, FamilyKind::kHypertree}) {
    if (f.has(kind)) {
      f.kind = kind;
      return f;
    }
  }
  f.flags.insert(FamilyKind::kOther);
  f.kind = FamilyKind::kOther;
  return f;
}

}  // namespace hyperres
