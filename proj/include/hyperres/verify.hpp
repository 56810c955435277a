#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperres/limits.hpp"

namespace hyperres {

struct VerifyRow {
  std::string theorem;
  std::string instance;
  std::size_t predicted = 0;
  std::size_t solved = 0;
  bool pass = false;
  // Set when a solver cap was hit; such rows are neither passed nor failed.
  bool skipped = false;
  std::string note;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::size_t max_k = 9;
  std::size_t max_n = 5;
  SolverLimits limits;
};

struct VerifyReport {
  // Sorted by theorem id, then by instance parameters.
  std::vector<VerifyRow> rows;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }
};

/// Runs every closed-form claim on generated instances with k <= max_k and
/// n <= max_n, plus the pinned worked examples, comparing against the exact
/// solvers.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace hyperres
