#pragma once

// Brute-force oracles and random instance generators for tests.
//
// Nothing here calls the library's distance or search code: distances come
// from breadth-first search over the vertex-edge incidence graph, and the
// dimension oracles scan every subset / every set partition without any
// twin reduction.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperres/hypergraph.hpp"

namespace hyperres::testing {

constexpr int kInf = -1;

// d(u, v) = half the hop count in the bipartite incidence graph.
inline std::vector<std::vector<int>> incidence_distances(const Hypergraph& h) {
  const std::size_t m = h.num_vertices();
  const std::size_t k = h.num_edges();
  std::vector<std::vector<std::size_t>> adj(m + k);
  for (std::size_t e = 0; e < k; ++e) {
    for (VertexId v : h.edge(e)) {
      adj[v].push_back(m + e);
      adj[m + e].push_back(v);
    }
  }
  std::vector<std::vector<int>> d(m, std::vector<int>(m, kInf));
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<int> hops(m + k, kInf);
    hops[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (auto y : adj[x]) {
        if (hops[y] == kInf) {
          hops[y] = hops[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (std::size_t t = 0; t < m; ++t) d[s][t] = hops[t] == kInf ? kInf : hops[t] / 2;
  }
  return d;
}

inline bool oracle_resolves(const std::vector<std::vector<int>>& d,
                            const std::vector<std::size_t>& w) {
  std::set<std::vector<int>> seen;
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::vector<int> r;
    for (auto x : w) r.push_back(d[v][x]);
    if (!seen.insert(r).second) return false;
  }
  return true;
}

// Calls `visit` with every subset of {0..m-1} of size s, lexicographically.
inline void for_each_subset(std::size_t m, std::size_t s,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
  do {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) subset.push_back(i);
    }
    visit(subset);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

inline std::size_t oracle_metric_dimension(const Hypergraph& h) {
  const auto d = incidence_distances(h);
  for (std::size_t s = 0; s <= d.size(); ++s) {
    bool found = false;
    for_each_subset(d.size(), s, [&](const auto& w) {
      if (!found && oracle_resolves(d, w)) found = true;
    });
    if (found) return s;
  }
  return d.size();
}

inline std::uint64_t oracle_count_bases(const Hypergraph& h) {
  const auto d = incidence_distances(h);
  const auto dim = oracle_metric_dimension(h);
  std::uint64_t count = 0;
  for_each_subset(d.size(), dim, [&](const auto& w) {
    if (oracle_resolves(d, w)) ++count;
  });
  return count;
}

inline bool oracle_partition_resolves(const std::vector<std::vector<int>>& d,
                                      const std::vector<int>& block,
                                      int blocks) {
  const std::size_t m = d.size();
  std::set<std::vector<int>> seen;
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<int> r(blocks, 1 << 20);
    for (std::size_t u = 0; u < m; ++u) {
      r[block[u]] = std::min(r[block[u]], d[v][u]);
    }
    if (!seen.insert(r).second) return false;
  }
  return true;
}

// Every set partition of {0..m-1}, as block labels in restricted-growth
// form, with the number of blocks.
inline void for_each_set_partition(
    std::size_t m, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> block(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == m) {
      visit(block, used);
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
}

inline std::size_t oracle_partition_dimension(const Hypergraph& h) {
  const auto d = incidence_distances(h);
  int best = static_cast<int>(d.size());
  for_each_set_partition(d.size(), [&](const std::vector<int>& block, int used) {
    if (used < best && oracle_partition_resolves(d, block, used)) best = used;
  });
  return static_cast<std::size_t>(best);
}

inline bool oracle_connected(const Hypergraph& h) {
  const auto d = incidence_distances(h);
  for (const auto& row : d) {
    for (int x : row) {
      if (x == kInf) return false;
    }
  }
  return true;
}

inline std::vector<std::string> numbered_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

// Connected Sperner hypergraph with 2..max_vertices vertices.
inline Hypergraph random_connected_sperner(std::mt19937& rng,
                                           std::size_t max_vertices) {
  while (true) {
    std::uniform_int_distribution<std::size_t> pick_m(2, max_vertices);
    const std::size_t m = pick_m(rng);
    std::uniform_int_distribution<std::size_t> pick_k(1, m);
    const std::size_t k = pick_k(rng);
    std::uniform_int_distribution<std::size_t> pick_v(0, m - 1);
    std::uniform_int_distribution<std::size_t> pick_size(2, std::min<std::size_t>(4, m));
    std::vector<std::set<VertexId>> edges(k);
    for (auto& e : edges) {
      const auto size = pick_size(rng);
      while (e.size() < size) e.insert(static_cast<VertexId>(pick_v(rng)));
    }
    std::uniform_int_distribution<std::size_t> pick_e(0, k - 1);
    for (VertexId v = 0; v < m; ++v) {
      bool covered = std::any_of(edges.begin(), edges.end(),
                                 [&](const auto& e) { return e.count(v) != 0; });
      if (!covered) edges[pick_e(rng)].insert(v);
    }
    // Drop edges contained in others; the superset keeps coverage and
    // connectivity.
    std::vector<VertexSet> kept;
    for (std::size_t i = 0; i < k; ++i) {
      bool contained = false;
      for (std::size_t j = 0; j < k && !contained; ++j) {
        if (i == j) continue;
        const bool sub = std::includes(edges[j].begin(), edges[j].end(),
                                       edges[i].begin(), edges[i].end());
        contained = sub && (edges[i] != edges[j] || i > j);
      }
      if (!contained) kept.emplace_back(edges[i].begin(), edges[i].end());
    }
    auto h = Hypergraph::from_ids(numbered_labels(m), kept);
    if (oracle_connected(h)) return h;
  }
}

// Connected hypergraph in which every edge has at least two vertices of
// degree one, so n(i) != 0 for every edge.
inline Hypergraph random_private_hypergraph(std::mt19937& rng) {
  while (true) {
    std::uniform_int_distribution<std::size_t> pick_k(1, 3);
    std::uniform_int_distribution<std::size_t> pick_core(1, 3);
    std::uniform_int_distribution<std::size_t> pick_private(2, 3);
    const std::size_t k = pick_k(rng);
    const std::size_t core = pick_core(rng);
    std::uniform_int_distribution<std::size_t> pick_v(0, core - 1);
    std::vector<VertexSet> edges(k);
    std::size_t next = core;
    for (auto& e : edges) {
      std::set<VertexId> members;
      const std::size_t shared = 1 + pick_v(rng);
      while (members.size() < shared) members.insert(static_cast<VertexId>(pick_v(rng)));
      for (std::size_t i = pick_private(rng); i > 0; --i) {
        members.insert(static_cast<VertexId>(next++));
      }
      e.assign(members.begin(), members.end());
    }
    // Core vertices outside every edge are dropped by relabelling.
    std::vector<int> id(next, -1);
    std::vector<std::string> labels;
    for (auto& e : edges) {
      for (auto& v : e) {
        if (id[v] < 0) {
          id[v] = static_cast<int>(labels.size());
          labels.push_back("y" + std::to_string(labels.size()));
        }
        v = static_cast<VertexId>(id[v]);
      }
    }
    auto h = Hypergraph::from_ids(labels, edges);
    if (oracle_connected(h)) return h;
  }
}

}  // namespace hyperres::testing
