#include "hyperres/resolving.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hyperres/error.hpp"
#include "hyperres/structure.hpp"

namespace hyperres {
namespace {

// Advances `idx` (strictly increasing indices into [0, n)) to the next
// combination in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t i = s; i-- > 0;) {
    if (idx[i] < n - s + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // out * (n - r + i) / i stays exact; saturate on overflow.
    if (out > UINT64_MAX / (n - r + i)) return UINT64_MAX;
    out = out * (n - r + i) / i;
  }
  return out;
}

// Tests candidate sets F ∪ S for S ⊆ R(H). Vertices of F are always in the
// set, so only the representatives outside S need distinct representations,
// and their distances to F are folded into one precomputed key.
class ReducedSearch {
 public:
  ReducedSearch(const Hypergraph& h, const SolverLimits& limits)
      : m_(h.num_vertices()),
        dist_(distance_matrix(h).finite_table()),
        twins_(twin_classes(h)),
        reps_(twins_.representatives) {
    if (reps_.size() > limits.max_representatives) {
      throw Error(ErrorCode::kCapExceeded,
                  std::to_string(reps_.size()) +
                      " representatives exceed the cap of " +
                      std::to_string(limits.max_representatives));
    }
    std::vector<std::vector<int>> keys(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      for (VertexId f : twins_.forced) keys[i].push_back(at(reps_[i], f));
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    forced_key_.resize(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      forced_key_[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
  }

  const TwinClassPartition& twins() const { return twins_; }
  std::size_t num_reps() const { return reps_.size(); }
  VertexId rep(std::size_t i) const { return reps_[i]; }

  bool resolves(const std::vector<std::size_t>& chosen) {
    const std::size_t width = chosen.size() + 1;
    rows_.clear();
    std::size_t next = 0;
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      if (next < chosen.size() && chosen[next] == i) {
        ++next;
        continue;
      }
      rows_.push_back(forced_key_[i]);
      for (std::size_t c : chosen) rows_.push_back(at(reps_[i], reps_[c]));
    }
    const std::size_t count = rows_.size() / width;
    order_.resize(count);
    std::iota(order_.begin(), order_.end(), 0);
    auto row = [&](std::size_t r) { return rows_.begin() + r * width; };
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(row(a), row(a) + width, row(b),
                                          row(b) + width);
    });
    for (std::size_t i = 1; i < count; ++i) {
      if (std::equal(row(order_[i - 1]), row(order_[i - 1]) + width,
                     row(order_[i]))) {
        return false;
      }
    }
    return true;
  }

  // Smallest |S| for which some F ∪ S resolves, and the first such S.
  std::vector<std::size_t> first_minimal() {
    for (std::size_t s = 0; s <= reps_.size(); ++s) {
      std::vector<std::size_t> idx(s);
      std::iota(idx.begin(), idx.end(), 0);
      do {
        if (resolves(idx)) return idx;
      } while (next_combination(idx, reps_.size()));
    }
    // F ∪ R = V always resolves.
    throw std::logic_error("no resolving set found");
  }

 private:
  int at(VertexId u, VertexId v) const { return dist_[u * m_ + v]; }

  std::size_t m_;
  std::vector<int> dist_;
  TwinClassPartition twins_;
  VertexSet reps_;
  std::vector<int> forced_key_;
  std::vector<int> rows_;
  std::vector<std::size_t> order_;
};

}  // namespace

ResolvingSetCertificate is_resolving_set(const Hypergraph& h,
                                         std::span<const VertexId> landmarks) {
  return is_resolving_set(h, distance_matrix(h), landmarks);
}

ResolvingSetCertificate is_resolving_set(const Hypergraph& h,
                                         const DistanceMatrix& d,
                                         std::span<const VertexId> landmarks) {
  const auto m = static_cast<VertexId>(h.num_vertices());
  for (VertexId w : landmarks) {
    if (w >= m) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "landmark id " + std::to_string(w) + " with " +
                      std::to_string(m) + " vertices");
    }
  }
  const auto table = d.finite_table();
  ResolvingSetCertificate cert;
  cert.landmarks.assign(landmarks.begin(), landmarks.end());
  cert.representations.resize(m);
  for (VertexId v = 0; v < m; ++v) {
    auto& r = cert.representations[v];
    r.reserve(landmarks.size());
    for (VertexId w : landmarks) r.push_back(table[v * m + w]);
  }
  for (VertexId u = 0; u < m && !cert.conflict; ++u) {
    for (VertexId v = u + 1; v < m; ++v) {
      if (cert.representations[u] == cert.representations[v]) {
        cert.conflict = std::make_pair(u, v);
        break;
      }
    }
  }
  cert.valid = !cert.conflict.has_value();
  return cert;
}

std::size_t dim_lower_bound(const Hypergraph& h) {
  return twin_classes(h).excess_sum();
}

MetricDimensionResult metric_dimension(const Hypergraph& h,
                                       const SolverLimits& limits) {
  ReducedSearch search(h, limits);
  const auto chosen = search.first_minimal();
  VertexSet basis = search.twins().forced;
  for (std::size_t i : chosen) basis.push_back(search.rep(i));
  std::sort(basis.begin(), basis.end());

  MetricDimensionResult result;
  result.dimension = basis.size();
  result.basis = is_resolving_set(h, basis);
  return result;
}

std::uint64_t count_minimum_bases(const Hypergraph& h,
                                  const SolverLimits& limits) {
  ReducedSearch search(h, limits);
  const std::size_t size = search.first_minimal().size();
  const std::uint64_t candidates = binomial(search.num_reps(), size);
  if (candidates > limits.max_basis_candidates) {
    throw Error(ErrorCode::kCapExceeded,
                std::to_string(candidates) + " candidate subsets exceed the cap of " +
                    std::to_string(limits.max_basis_candidates));
  }
  const auto& twins = search.twins();
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::uint64_t total = 0;
  do {
    if (!search.resolves(idx)) continue;
    std::vector<bool> kept(twins.classes.size(), false);
    for (std::size_t i : idx) kept[twins.class_of[search.rep(i)]] = true;
    std::uint64_t variants = 1;
    for (std::size_t c = 0; c < twins.classes.size(); ++c) {
      if (!kept[c]) variants *= twins.classes[c].members.size();
    }
    total += variants;
  } while (next_combination(idx, search.num_reps()));
  return total;
}

}  // namespace hyperres
