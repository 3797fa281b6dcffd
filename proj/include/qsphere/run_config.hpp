// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace qsphere {

/// Shared configuration for the CLI subcommands and report builders.
struct RunConfig {
  int rank = 2;
  int kMax = 0;                  // 0 -> 4 * rank + 8
  std::vector<int> zetaCutoffs;  // empty -> spectrum::default_zeta_cutoffs(rank)
  int gridPoints = 200;
  int refineRounds = 3;
  int cubePoints = 40;
  int lambdaCap = 4;   // symbolic suites
  int gammaCap = 30;   // path suites
  unsigned long long seed = 20240915;
  std::string format = "json";  // json | csv (csv: spectrum tables only)
  std::string outPath;          // empty -> stdout
  bool parallel = false;
  bool includeTimings = false;  // timings are off by default to keep reports
                                // byte-reproducible for identical configs

  int effective_k_max() const { return kMax > 0 ? kMax : 4 * rank + 8; }
  std::vector<int> effective_zeta_cutoffs() const;
};

}  // namespace qsphere
