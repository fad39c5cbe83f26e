#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermsym/jordan.hpp"

namespace hermsym {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 20240601;
  /// multiplies every floating tolerance (0 makes the numeric suites fail)
  double tolerance_scale = 1.0;
  /// 0 = use HERMSYM_THREADS or the hardware count
  int threads = 0;
};

/// Worker cap honoring the HERMSYM_THREADS environment variable.
int worker_count(int njobs, int requested = 0);

/// The fixed acceptance gate: every structural identity at its pinned
/// tolerance, one result per criterion.
std::vector<CheckResult> acceptance_criteria(const VerifyOptions& opt = {});

const std::vector<std::string>& suite_names();

/// Per-model verification suite (jordan-identities, peirce, moment,
/// branching, okounkov). Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite, const Model& m,
                                   const VerifyOptions& opt = {});

}  // namespace hermsym
