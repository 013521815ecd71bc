#pragma once

#include <string>
#include <vector>

#include "loom/crystal.hpp"
#include "loom/report.hpp"

namespace loom {

struct SuiteConfig {
  std::string type = "A";
  int rank = 1;
  int i = 1;
  /// Tensor power; suites that sweep powers go up to this value.
  int m = 2;
  long window = 3;
  int t1 = 1;
  int t2 = 1;
  Execution execution = Execution::Parallel;
  std::size_t node_cap = kDefaultNodeCap;
};

/// normality, weyl, stretch, concat, xi, energy, maj, psi, decompose, sl2.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all" (check names prefixed by the
/// suite). Throws std::invalid_argument on an unknown name.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace loom
