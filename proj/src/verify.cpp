#include "hyperres/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <tuple>

#include "hyperres/error.hpp"
#include "hyperres/families.hpp"
#include "hyperres/partition.hpp"
#include "hyperres/resolving.hpp"
#include "hyperres/structure.hpp"
#include "hyperres/transforms.hpp"

namespace hyperres {
namespace {

struct PendingRow {
  std::string theorem;
  std::string instance;
  std::tuple<std::size_t, std::size_t, std::uint64_t> order;
  std::size_t predicted = 0;
  std::function<std::size_t()> solve;
};

Hypergraph small_example() {
  return Hypergraph::from_labels({{"v1", "v2", "v3"}, {"v3", "v4"}});
}

Hypergraph triangle_example() {
  return Hypergraph::from_labels({{"v1", "v2", "v3", "v4"},
                                  {"v3", "v4", "v5", "v6"},
                                  {"v1", "v2", "v5", "v6"}});
}

Hypergraph two_edge_example() {
  std::vector<std::string> first;
  std::vector<std::string> second;
  for (int i = 1; i <= 7; ++i) first.push_back("v" + std::to_string(i));
  for (int i = 6; i <= 11; ++i) second.push_back("v" + std::to_string(i));
  return Hypergraph::from_labels({first, second});
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const VerifyRow& r) { return !r.skipped && r.pass; });
}

std::size_t VerifyReport::failed() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const VerifyRow& r) { return !r.skipped && !r.pass; });
}

std::size_t VerifyReport::skipped() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const VerifyRow& r) { return r.skipped; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  const SolverLimits limits = options.limits;
  const std::size_t max_k = options.max_k;
  const std::size_t max_n = options.max_n;
  std::vector<PendingRow> pending;

  auto add_family = [&](const std::string& theorem, const GeneratorSpec& spec,
                        std::size_t predicted, bool partition, bool dual_first) {
    PendingRow row;
    row.theorem = theorem;
    row.instance = spec.describe();
    row.order = {spec.k, spec.n, spec.seed};
    row.predicted = predicted;
    row.solve = [spec, partition, dual_first, limits] {
      Hypergraph h = generate(spec);
      if (dual_first) h = dual(h);
      if (partition) return partition_dimension(h, limits).dimension;
      return metric_dimension(h, limits).dimension;
    };
    pending.push_back(std::move(row));
  };
  auto spec_of = [](FamilyKind kind, std::size_t k, std::size_t n,
                    std::uint64_t seed = 0) {
    GeneratorSpec s;
    s.kind = kind;
    s.k = k;
    s.n = n;
    s.seed = seed;
    return s;
  };

  for (std::size_t k = 3; k <= max_k; ++k) {
    for (std::size_t n = 3; n <= max_n; ++n) {
      auto s = spec_of(FamilyKind::kHypercycle, k, n);
      add_family(n == 3 ? "dim.hypercycle-3-uniform" : "dim.hypercycle",
                 s, *predicted_dim(s), false, false);
    }
    for (std::size_t n = 3; n <= max_n; ++n) {
      auto s = spec_of(FamilyKind::kHyperstar, k, n);
      add_family("dim.hyperstar", s, *predicted_dim(s), false, false);
    }
    // Duals of hypercycles have the cycle C_k as middle graph.
    if (max_n >= 3) {
      add_family("dim.dual-hypercycle", spec_of(FamilyKind::kHypercycle, k, 3),
                 2, false, true);
      add_family("pd.dual-hypercycle", spec_of(FamilyKind::kHypercycle, k, 3),
                 3, true, true);
    }
  }
  for (std::size_t k = 2; k <= max_k; ++k) {
    for (std::size_t n = 3; n <= max_n; ++n) {
      auto s = spec_of(FamilyKind::kHyperpath, k, n);
      add_family("dim.hyperpath", s, *predicted_dim(s), false, false);
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto t = spec_of(FamilyKind::kHypertree, k, n, seed);
        add_family("dim.hypertree", t, *predicted_dim(t), false, false);
      }
    }
    if (max_n >= 3) {
      add_family("dim.dual-hyperpath", spec_of(FamilyKind::kHyperpath, k, 3), 1,
                 false, true);
      add_family("pd.dual-hyperpath", spec_of(FamilyKind::kHyperpath, k, 3), 2,
                 true, true);
    }
    for (std::size_t n = 2; n <= max_n; ++n) {
      auto s = spec_of(FamilyKind::kHyperpath, k, n);
      add_family("pd.hyperpath", s, *predicted_pd(s), true, false);
    }
  }
  for (std::size_t k = 3; k <= max_k; ++k) {
    for (std::size_t n = 2; n <= max_n; ++n) {
      auto s = spec_of(FamilyKind::kHypercycle, k, n);
      add_family(n == 3 ? "pd.hypercycle-3-uniform" : "pd.hypercycle", s,
                 *predicted_pd(s), true, false);
    }
  }

  auto add_example = [&](const std::string& theorem, const std::string& instance,
                         std::size_t predicted, std::function<std::size_t()> solve) {
    PendingRow row;
    row.theorem = theorem;
    row.instance = instance;
    row.predicted = predicted;
    row.solve = std::move(solve);
    pending.push_back(std::move(row));
  };
  add_example("example.dim", "4-vertex two-edge", 2, [limits] {
    return metric_dimension(small_example(), limits).dimension;
  });
  add_example("example.dim", "6-vertex three-edge", 5, [limits] {
    return metric_dimension(triangle_example(), limits).dimension;
  });
  add_example("example.pd", "11-vertex two-edge", 6, [limits] {
    return partition_dimension(two_edge_example(), limits).dimension;
  });
  add_example("example.rank", "11-vertex two-edge", 7, [] {
    return analyze_structure(two_edge_example()).rank;
  });

  std::stable_sort(pending.begin(), pending.end(),
                   [](const PendingRow& a, const PendingRow& b) {
                     return std::tie(a.theorem, a.order) < std::tie(b.theorem, b.order);
                   });

  VerifyReport report;
  report.rows.reserve(pending.size());
  for (auto& p : pending) {
    VerifyRow row;
    row.theorem = p.theorem;
    row.instance = p.instance;
    row.predicted = p.predicted;
    const auto start = std::chrono::steady_clock::now();
    try {
      row.solved = p.solve();
      row.pass = row.solved == row.predicted;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCapExceeded) throw;
      row.skipped = true;
      row.note = e.what();
    }
    row.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace hyperres
