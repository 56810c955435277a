#include "hyperres/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "hyperres/error.hpp"
#include "hyperres/structure.hpp"

namespace hyperres {
namespace {

using VertexMask = std::uint64_t;

constexpr std::size_t kMaxMaskVertices = 64;

// Restricted-growth enumeration of partitions of 0..m-1 into exactly t
// blocks. Vertex i goes to a block no larger than one past the largest
// block used so far, so each unordered partition appears once.
class PartitionSearch {
 public:
  PartitionSearch(std::size_t m, const std::vector<int>& dist)
      : m_(m), balls_(m), earlier_twins_(m, 0), block_of_(m, 0) {
    for (std::size_t v = 0; v < m; ++v) {
      int ecc = 0;
      for (std::size_t u = 0; u < m; ++u) ecc = std::max(ecc, dist[v * m + u]);
      balls_[v].assign(static_cast<std::size_t>(ecc) + 1, 0);
      for (std::size_t u = 0; u < m; ++u) {
        for (int r = dist[v * m + u]; r <= ecc; ++r) {
          balls_[v][r] |= VertexMask{1} << u;
        }
      }
    }
    // u and v are interchangeable when every third vertex sees them at the
    // same distance; a resolving partition must separate them.
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t u = 0; u < v; ++u) {
        bool twins = true;
        for (std::size_t w = 0; w < m && twins; ++w) {
          if (w != u && w != v) twins = dist[u * m + w] == dist[v * m + w];
        }
        if (twins) earlier_twins_[v] |= VertexMask{1} << u;
      }
    }
  }

  // Size of the largest set of mutually interchangeable vertices.
  std::size_t largest_twin_group() const {
    std::size_t best = 1;
    for (std::size_t v = 0; v < m_; ++v) {
      best = std::max<std::size_t>(best, std::popcount(earlier_twins_[v]) + 1);
    }
    return best;
  }

  // First resolving partition into exactly t blocks, if any.
  std::optional<Partition> find(std::size_t t) {
    t_ = t;
    blocks_.assign(t, 0);
    reps_.assign(m_ * t, 0);
    found_ = false;
    place(0, 0);
    if (!found_) return std::nullopt;
    Partition out(t);
    for (std::size_t v = 0; v < m_; ++v) {
      out[block_of_[v]].push_back(static_cast<VertexId>(v));
    }
    return out;
  }

 private:
  void place(std::size_t v, std::size_t used) {
    if (v == m_) {
      if (used == t_ && resolving()) found_ = true;
      return;
    }
    if (used + (m_ - v) < t_) return;
    const std::size_t limit = std::min(used + 1, t_);
    for (std::size_t b = 0; b < limit && !found_; ++b) {
      if (blocks_[b] & earlier_twins_[v]) continue;
      block_of_[v] = b;
      blocks_[b] |= VertexMask{1} << v;
      place(v + 1, b == used ? used + 1 : used);
      if (found_) return;
      blocks_[b] &= ~(VertexMask{1} << v);
    }
  }

  int distance_to_block(std::size_t v, VertexMask block) const {
    const auto& ball = balls_[v];
    for (std::size_t r = 0; r < ball.size(); ++r) {
      if (ball[r] & block) return static_cast<int>(r);
    }
    return -1;
  }

  bool resolving() {
    for (std::size_t b = 0; b < t_; ++b) {
      if (std::popcount(blocks_[b]) < 2) continue;
      for (VertexMask s = blocks_[b]; s != 0; s &= s - 1) {
        const std::size_t v = std::countr_zero(s);
        int* row = &reps_[v * t_];
        for (std::size_t c = 0; c < t_; ++c) {
          row[c] = c == b ? 0 : distance_to_block(v, blocks_[c]);
        }
        for (VertexMask p = blocks_[b] & ((VertexMask{1} << v) - 1); p != 0;
             p &= p - 1) {
          const int* other = &reps_[std::countr_zero(p) * t_];
          if (std::equal(row, row + t_, other)) return false;
        }
      }
    }
    return true;
  }

  std::size_t m_;
  std::vector<std::vector<VertexMask>> balls_;
  std::vector<VertexMask> earlier_twins_;
  std::vector<std::size_t> block_of_;
  std::vector<VertexMask> blocks_;
  std::vector<int> reps_;
  std::size_t t_ = 0;
  bool found_ = false;
};

}  // namespace

PartitionCertificate is_resolving_partition(const Hypergraph& h,
                                            const Partition& classes) {
  return is_resolving_partition(h, distance_matrix(h), classes);
}

PartitionCertificate is_resolving_partition(const Hypergraph& h,
                                            const DistanceMatrix& d,
                                            const Partition& classes) {
  const std::size_t m = h.num_vertices();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(m, kNone);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw Error(ErrorCode::kNotAPartition,
                  "class " + std::to_string(c + 1) + " is empty");
    }
    for (VertexId v : classes[c]) {
      if (v >= m) {
        throw Error(ErrorCode::kNotAPartition,
                    "vertex id " + std::to_string(v) + " out of range");
      }
      if (owner[v] != kNone) {
        throw Error(ErrorCode::kNotAPartition,
                    "vertex '" + h.label(v) + "' appears twice");
      }
      owner[v] = c;
    }
  }
  for (std::size_t v = 0; v < m; ++v) {
    if (owner[v] == kNone) {
      throw Error(ErrorCode::kNotAPartition,
                  "vertex '" + h.label(v) + "' is in no class");
    }
  }
  if (!d.connected()) {
    throw Error(ErrorCode::kDisconnected, "hypergraph is not connected");
  }

  PartitionCertificate cert;
  cert.classes = classes;
  for (auto& c : cert.classes) std::sort(c.begin(), c.end());
  cert.representations.resize(m);
  for (VertexId v = 0; v < m; ++v) {
    cert.representations[v] = representation(d, v, cert.classes);
  }
  for (VertexId u = 0; u < m && !cert.conflict; ++u) {
    for (VertexId v = u + 1; v < m; ++v) {
      if (owner[u] == owner[v] &&
          cert.representations[u] == cert.representations[v]) {
        cert.conflict = std::make_pair(u, v);
        break;
      }
    }
  }
  cert.valid = !cert.conflict.has_value();
  return cert;
}

std::size_t pd_lower_bound(const Hypergraph& h) {
  if (!is_sperner(h)) {
    throw Error(ErrorCode::kNotSperner,
                "partition lower bound needs a Sperner hypergraph");
  }
  if (!is_connected(h)) {
    throw Error(ErrorCode::kDisconnected, "hypergraph is not connected");
  }
  // A single edge puts every vertex in one twin class; any two vertices
  // sharing a partition class then see every other class at distance 1.
  if (h.num_edges() == 1) return h.num_vertices();
  return twin_classes(h).largest_class() + 1;
}

PartitionDimensionResult partition_dimension(
    const Hypergraph& h, const SolverLimits& limits,
    const ResolvingSetCertificate* known_basis) {
  const std::size_t m = h.num_vertices();
  const std::size_t cap =
      std::min(limits.max_partition_vertices, kMaxMaskVertices);
  if (m > cap) {
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(m) + " vertices exceed the partition cap of " +
                    std::to_string(cap));
  }
  const auto d = distance_matrix(h);
  const auto table = d.finite_table();

  PartitionDimensionResult result;
  if (m == 1) {
    result.dimension = 1;
    result.witness = is_resolving_partition(h, d, Partition{{0}});
    return result;
  }

  PartitionSearch search(m, table);
  std::size_t lower = std::max<std::size_t>(2, search.largest_twin_group());
  if (is_sperner(h)) lower = std::max(lower, pd_lower_bound(h));

  std::size_t stop = m;
  Partition fallback;
  if (known_basis != nullptr && known_basis->valid) {
    VertexSet basis(known_basis->landmarks.begin(), known_basis->landmarks.end());
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    VertexSet rest;
    for (VertexId v = 0; v < m; ++v) {
      if (!std::binary_search(basis.begin(), basis.end(), v)) rest.push_back(v);
    }
    if (!rest.empty()) {
      for (VertexId w : basis) fallback.push_back({w});
      fallback.push_back(rest);
      stop = basis.size() + 1;
    }
  }

  for (std::size_t t = lower; t <= m; ++t) {
    if (t == stop && !fallback.empty()) {
      auto cert = is_resolving_partition(h, d, fallback);
      if (cert.valid) {
        result.dimension = t;
        result.witness = std::move(cert);
        return result;
      }
    }
    if (auto found = search.find(t)) {
      result.dimension = t;
      result.witness = is_resolving_partition(h, d, *found);
      return result;
    }
  }
  throw std::logic_error("singleton partition must resolve");
}

}  // namespace hyperres
