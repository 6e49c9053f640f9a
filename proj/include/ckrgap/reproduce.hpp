#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ckrgap/io.hpp"

namespace ckrgap {

struct ReproduceOptions {
  std::string suite = "all";  // constants | lemmas | enumeration | all
  /// Labeling ceiling for every enumeration check; 0 exhausts immediately.
  std::uint64_t budget = 2'000'000'000;
  unsigned threads = 1;
  /// Adds the slow Delta_{4,3} face-count sweep.
  bool optional_checks = false;
};

const std::vector<std::string>& reproduce_suites();

/// Runs the suite's checks in a fixed order. A check that throws is
/// reported as failed with the error code attached.
std::vector<CheckOutcome> run_reproduce(const ReproduceOptions& options);

}  // namespace ckrgap
