// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace qsphere {

// Index of one isotypic block of the quaternion-sphere coordinate algebra.
// (g1, g2) are the first two entries of the highest weight (g1, g2, 0, ..., 0)
// and g3 enumerates the multiplicity copies of that weight.
struct GammaIndex {
  int g1 = 0;
  int g2 = 0;
  int g3 = 0;

  bool valid() const {
    return g1 >= 0 && g2 >= 0 && g3 >= 0 && g2 <= g1 && g3 <= g1 - g2;
  }

  // g1 - g2 - 2*g3 classifies the index set into the regions used by the
  // sup-norm ratio bounds and the path moves.
  int slack() const { return g1 - g2 - 2 * g3; }

  friend auto operator<=>(const GammaIndex&, const GammaIndex&) = default;

  std::string str() const {
    return "(" + std::to_string(g1) + "," + std::to_string(g2) + "," +
           std::to_string(g3) + ")";
  }
};

inline GammaIndex require_in_gamma(const GammaIndex& g) {
  if (!g.valid()) {
    throw std::domain_error("gamma index " + g.str() +
                            " violates 0 <= g2 <= g1, 0 <= g3 <= g1 - g2");
  }
  return g;
}

// Region predicates on Gamma, numbered 1..4:
//   1: g1 == g2 and g3 == 0
//   2: g1 - g2 - 2*g3 == 0
//   3: g1 - g2 - 2*g3 >= 0
//   4: g1 - g2 - 2*g3 <= 0
inline bool region_predicate(int part, const GammaIndex& g) {
  switch (part) {
    case 1:
      return g.g1 == g.g2 && g.g3 == 0;
    case 2:
      return g.slack() == 0;
    case 3:
      return g.slack() >= 0;
    case 4:
      return g.slack() <= 0;
    default:
      throw std::domain_error("region part must be 1..4");
  }
}

}  // namespace qsphere
