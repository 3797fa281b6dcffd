// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qsphere/gamma.hpp"

namespace qsphere::paths {

/// Edge moves on Gamma.  Each move is admissible only where its region
/// predicate (gamma.hpp, parts 1..4) holds at the source.
enum class Move {
  AddE1E2,   // +(1,1,0), region 1
  Add2E1E3,  // +(2,0,1), region 2
  AddE1,     // +(1,0,0), region 3
  AddE1E3,   // +(1,0,1), region 4
};

GammaIndex move_delta(Move m);
int move_region(Move m);
const char* move_label(Move m);

/// Applies the move, enforcing the source-region predicate and Gamma
/// membership of the target.
GammaIndex apply_move(Move m, const GammaIndex& source);

struct PathReport {
  GammaIndex target;
  std::vector<GammaIndex> waypoints;  // starts at (0,0,0), ends at target
  std::vector<Move> moves;
  int length = 0;
  std::array<int, 3> stageLengths{0, 0, 0};
};

/// Three-stage path from (0,0,0) to gamma: region-1 moves to (g2,g2,0),
/// region-2 moves along the diagonal, then region-3 or region-4 moves to the
/// target depending on the sign of g1 - g2 - 2*g3.  Length never exceeds g1.
PathReport build_path(const GammaIndex& gamma);

/// |d0| + c * (path length), an upper bound for |d^gamma| whenever every
/// admissible move changes the assignment by less than c.
double eigenvalue_bound(double d0, double c, const GammaIndex& gamma);

using DiracAssignment = std::function<double(const GammaIndex&)>;

struct StepBoundReport {
  std::array<double, 4> supPerPart{0, 0, 0, 0};
  double maxStep = 0;
  bool allFinite = true;
};

/// Supremum of |d(gamma+step) - d(gamma)| over each region, for sources with
/// g1 <= gamma1Max.  The assignment must be defined up to g1 <= gamma1Max+2.
StepBoundReport verify_step_bounds(const DiracAssignment& d, int gamma1Max);

}  // namespace qsphere::paths
