// SPDX-License-Identifier: Apache-2.0
#include "qsphere/run_config.hpp"

#include "qsphere/spectrum_zeta.hpp"

namespace qsphere {

std::vector<int> RunConfig::effective_zeta_cutoffs() const {
  return zetaCutoffs.empty() ? spectrum::default_zeta_cutoffs(rank) : zetaCutoffs;
}

}  // namespace qsphere
