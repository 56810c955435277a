#include "hyperres/families.hpp"

#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperres/error.hpp"

namespace hyperres {
namespace {

// Edges over integer tokens; labels become v1, v2, ... in order of first
// appearance, so vertex ids and labels agree.
Hypergraph from_tokens(const std::vector<std::vector<int>>& edges) {
  std::unordered_map<int, std::string> names;
  std::vector<std::vector<std::string>> labelled;
  for (const auto& edge : edges) {
    std::vector<std::string> row;
    for (int token : edge) {
      auto [it, inserted] = names.try_emplace(token);
      if (inserted) it->second = "v" + std::to_string(names.size());
      row.push_back(it->second);
    }
    labelled.push_back(std::move(row));
  }
  return Hypergraph::from_labels(labelled);
}

void require(bool condition, const GeneratorSpec& spec, const char* rule) {
  if (!condition) {
    throw Error(ErrorCode::kInvalidSpec, spec.describe() + ": " + rule);
  }
}

void validate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kHyperpath:
      require(spec.k >= 1 && spec.n >= 2, spec, "hyperpath needs k >= 1, n >= 2");
      break;
    case FamilyKind::kHypercycle:
      require(spec.k >= 3 && spec.n >= 2, spec, "hypercycle needs k >= 3, n >= 2");
      break;
    case FamilyKind::kHyperstar:
      require(spec.k >= 2 && spec.n >= 2, spec, "hyperstar needs k >= 2, n >= 2");
      require(spec.center_size == 1, spec, "only a one-vertex center is supported");
      break;
    case FamilyKind::kHypertree:
      require(spec.k >= 1 && spec.n >= 2, spec, "hypertree needs k >= 1, n >= 2");
      break;
    default:
      require(false, spec, "no generator for this family");
  }
}

}  // namespace

std::string GeneratorSpec::describe() const {
  std::string out = std::string(to_string(kind)) + "(k=" + std::to_string(k) +
                    ",n=" + std::to_string(n);
  if (kind == FamilyKind::kHypertree) out += ",seed=" + std::to_string(seed);
  return out + ")";
}

Hypergraph generate(const GeneratorSpec& spec) {
  validate(spec);
  const int k = static_cast<int>(spec.k);
  const int n = static_cast<int>(spec.n);
  std::vector<std::vector<int>> edges;
  int next = 0;
  auto fresh = [&](std::vector<int>& edge, int count) {
    for (int i = 0; i < count; ++i) edge.push_back(next++);
  };

  switch (spec.kind) {
    case FamilyKind::kHyperpath: {
      std::vector<int> first;
      fresh(first, n);
      edges.push_back(first);
      for (int j = 1; j < k; ++j) {
        std::vector<int> edge{edges.back().back()};
        fresh(edge, n - 1);
        edges.push_back(edge);
      }
      break;
    }
    case FamilyKind::kHypercycle: {
      // Token -(j+1) is the vertex shared by edges j and j+1 (mod k).
      for (int j = 0; j < k; ++j) {
        std::vector<int> edge{-(((j + k - 1) % k) + 1)};
        fresh(edge, n - 2);
        edge.push_back(-(j + 1));
        edges.push_back(edge);
      }
      break;
    }
    case FamilyKind::kHyperstar: {
      const int center = next++;
      for (int j = 0; j < k; ++j) {
        std::vector<int> edge{center};
        fresh(edge, n - 1);
        edges.push_back(edge);
      }
      break;
    }
    case FamilyKind::kHypertree: {
      // mt19937_64 output is fixed by the standard; the modulo keeps the
      // draw portable where uniform_int_distribution is not.
      std::mt19937_64 rng(spec.seed);
      std::vector<int> first;
      fresh(first, n);
      edges.push_back(first);
      for (int j = 1; j < k; ++j) {
        std::vector<int> edge{static_cast<int>(rng() % static_cast<std::uint64_t>(next))};
        fresh(edge, n - 1);
        edges.push_back(edge);
      }
      break;
    }
    default:
      break;
  }
  return from_tokens(edges);
}

std::optional<std::size_t> predicted_dim(const GeneratorSpec& spec) {
  validate(spec);
  const std::size_t k = spec.k;
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case FamilyKind::kHyperpath:
      // Sum of n(i) plus n(i, i+1): end edges hold n - 2 degree-one
      // vertices, inner edges n - 3, and consecutive edges share exactly one.
      if (k == 1) return n - 1;
      if (n < 3) {
        throw Error(ErrorCode::kHypothesisNotMet,
                    "hyperpath formula needs n(1) and n(k) nonzero (n >= 3)");
      }
      return 2 * (n - 2) + (k - 2) * (n - 3);
    case FamilyKind::kHyperstar:
      if (k < 3 || n < 3) {
        throw Error(ErrorCode::kHypothesisNotMet,
                    "hyperstar formula needs k >= 3 and n >= 3");
      }
      return k * (n - 2);
    case FamilyKind::kHypercycle:
      if (n >= 4) return k * (n - 3);
      if (n == 3) return (k == 3 || k % 2 == 0) ? 2 : 3;
      return std::nullopt;
    case FamilyKind::kHypertree: {
      const auto h = generate(spec);
      const auto twins = twin_classes(h);
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (is_pendant(h, e) && twins.n_value({e}) == 0) {
          throw Error(ErrorCode::kHypothesisNotMet,
                      "hypertree formula needs n(p) nonzero for pendant edge " +
                          std::to_string(e + 1));
        }
      }
      return twins.excess_sum();
    }
    default:
      return std::nullopt;
  }
}

std::optional<std::size_t> predicted_pd(const GeneratorSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case FamilyKind::kHyperpath:
      return spec.n;
    case FamilyKind::kHypercycle:
      if (spec.n != 3) return spec.n + 1;
      return spec.k % 2 == 0 ? 3 : 4;
    default:
      return std::nullopt;
  }
}

}  // namespace hyperres
