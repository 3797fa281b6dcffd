// SPDX-License-Identifier: Apache-2.0
#include "qsphere/path_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsphere::paths {

GammaIndex move_delta(Move m) {
  switch (m) {
    case Move::AddE1E2:
      return GammaIndex{1, 1, 0};
    case Move::Add2E1E3:
      return GammaIndex{2, 0, 1};
    case Move::AddE1:
      return GammaIndex{1, 0, 0};
    case Move::AddE1E3:
      return GammaIndex{1, 0, 1};
  }
  throw std::domain_error("unknown move");
}

int move_region(Move m) {
  switch (m) {
    case Move::AddE1E2:
      return 1;
    case Move::Add2E1E3:
      return 2;
    case Move::AddE1:
      return 3;
    case Move::AddE1E3:
      return 4;
  }
  throw std::domain_error("unknown move");
}

const char* move_label(Move m) {
  switch (m) {
    case Move::AddE1E2:
      return "+e1+e2";
    case Move::Add2E1E3:
      return "+2e1+e3";
    case Move::AddE1:
      return "+e1";
    case Move::AddE1E3:
      return "+e1+e3";
  }
  throw std::domain_error("unknown move");
}

GammaIndex apply_move(Move m, const GammaIndex& source) {
  require_in_gamma(source);
  if (!region_predicate(move_region(m), source)) {
    throw std::domain_error(std::string("move ") + move_label(m) +
                            " is not admissible at " + source.str());
  }
  const GammaIndex d = move_delta(m);
  return require_in_gamma(GammaIndex{source.g1 + d.g1, source.g2 + d.g2, source.g3 + d.g3});
}

PathReport build_path(const GammaIndex& gamma) {
  require_in_gamma(gamma);
  PathReport report;
  report.target = gamma;
  report.waypoints.push_back(GammaIndex{0, 0, 0});

  const auto push = [&report](Move m) {
    report.waypoints.push_back(apply_move(m, report.waypoints.back()));
    report.moves.push_back(m);
  };

  const bool nonneg = gamma.slack() >= 0;  // ties use the region-3 construction
  const int stage1 = gamma.g2;
  const int stage2 = nonneg ? gamma.g3 : gamma.g1 - gamma.g2 - gamma.g3;
  const int stage3 = nonneg ? gamma.slack() : -gamma.slack();

  for (int s = 0; s < stage1; ++s) push(Move::AddE1E2);
  for (int s = 0; s < stage2; ++s) push(Move::Add2E1E3);
  for (int s = 0; s < stage3; ++s) push(nonneg ? Move::AddE1 : Move::AddE1E3);

  report.length = static_cast<int>(report.moves.size());
  report.stageLengths = {stage1, stage2, stage3};
  if (!(report.waypoints.back() == gamma)) {
    throw std::logic_error("path construction missed its target " + gamma.str());
  }
  return report;
}

double eigenvalue_bound(double d0, double c, const GammaIndex& gamma) {
  if (!(c > 0)) throw std::domain_error("step bound c must be positive");
  return std::abs(d0) + c * static_cast<double>(build_path(gamma).length);
}

StepBoundReport verify_step_bounds(const DiracAssignment& d, int gamma1Max) {
  if (gamma1Max < 0) throw std::domain_error("gamma1Max must be nonnegative");
  static constexpr Move kMoves[4] = {Move::AddE1E2, Move::Add2E1E3, Move::AddE1,
                                     Move::AddE1E3};
  StepBoundReport report;
  for (int g1 = 0; g1 <= gamma1Max; ++g1) {
    for (int g2 = 0; g2 <= g1; ++g2) {
      for (int g3 = 0; g3 <= g1 - g2; ++g3) {
        const GammaIndex g{g1, g2, g3};
        const double here = d(g);
        for (int part = 1; part <= 4; ++part) {
          if (!region_predicate(part, g)) continue;
          const GammaIndex next = apply_move(kMoves[part - 1], g);
          const double diff = std::abs(d(next) - here);
          report.supPerPart[static_cast<size_t>(part - 1)] =
              std::max(report.supPerPart[static_cast<size_t>(part - 1)], diff);
          report.allFinite = report.allFinite && std::isfinite(diff);
        }
      }
    }
  }
  report.maxStep = *std::max_element(report.supPerPart.begin(), report.supPerPart.end());
  return report;
}

}  // namespace qsphere::paths
