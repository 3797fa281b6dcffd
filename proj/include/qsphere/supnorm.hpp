// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

#include "qsphere/gamma.hpp"

namespace qsphere::supnorm {

struct SymmetryCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point of the nonnegative octant of the unit 3-sphere in R^4.
struct ThetaPoint {
  double x = 0, y = 0, z = 0, w = 1;

  double sum_squares() const { return x * x + y * y + z * z + w * w; }
  bool in_theta(double tol = 1e-12) const;
};

ThetaPoint require_in_theta(const ThetaPoint& p, double tol = 1e-12);

/// Monomial-type objective on Theta:
///   z^zExp * w^wExp * (x*w + y*z)^mixExp   when mixSwapsXY is false,
///   z^zExp * w^wExp * (x*z + y*w)^mixExp   when mixSwapsXY is true.
/// The two mixed factors exchange under the coordinate swap x <-> y, so both
/// spellings share one search path.
struct SphereMonomial {
  int zExp = 0;
  int wExp = 0;
  int mixExp = 0;
  bool mixSwapsXY = false;

  /// g^gamma = z^{g3} w^{g1-g2-g3} (xw+yz)^{g2}.
  static SphereMonomial surrogate(const GammaIndex& g);
  /// f_{(m,n)} = (zw)^n (xz+yw)^m; (0,0) is rejected.
  static SphereMonomial cross_term(int m, int n);

  double eval(const ThetaPoint& p) const;
  int total_degree() const { return zExp + wExp + 2 * mixExp; }
};

/// Value of g^gamma at p, with Theta membership enforced.
double eval_g(const GammaIndex& g, const ThetaPoint& p);

struct SupNormConfig {
  int slicePoints = 200;      // per axis on the reduced 2-angle slice
  int cubePoints = 40;        // per axis on the full 3-angle octant grid
  int refineRounds = 3;       // window re-grids around the incumbent
  double crossTolerance = 1e-6;
};

struct SupNormResult {
  double value = 0;
  ThetaPoint argmax;
  double cubeBest = 0;  // best value found by the full-octant cross-check
};

/// Supremum over Theta.  The refined search runs on the two-angle slice on
/// which the mixed factor is aligned (it contains a global maximizer for
/// every member of the family); a coarse full-octant spherical grid then
/// cross-checks the reduction and a violation beyond crossTolerance throws
/// SymmetryCheckError.
SupNormResult sup_norm(const SphereMonomial& target, const SupNormConfig& cfg = {});

/// Closed-form maximizer of f_{(m,n)}:
///   (sqrt(m), sqrt(m), sqrt(2n+m), sqrt(2n+m)) / (2 sqrt(n+m)).
ThetaPoint theta_maximizer(int m, int n);

/// gamma + step for the four ratio regions: +e1+e2, +2e1+e3, +e1, +e1+e3.
GammaIndex ratio_step(int part, const GammaIndex& g);

/// sup g^gamma / sup g^(gamma+step) on the region named by part (1..4).
double ratio_bound(int part, const GammaIndex& g, const SupNormConfig& cfg = {});

struct CptReport {
  bool preconditionMet = false;
  ThetaPoint fMaximizer;
  double hAtFMaximizer = 0;       // |h(x0)|
  double bound = 0;               // 1 / |h(x0)|
  std::vector<double> ratios;     // sup(h^m f) / sup(h^{m+1} f), m = 0..mMax
  std::vector<double> hAtArgmax;  // |h(x_m)|, m = 0..mMax+1
  bool inequalityHolds = false;
  bool monotoneH = false;
  bool pass() const { return preconditionMet && inequalityHolds && monotoneH; }
};

/// Checks sup(h^m f)/sup(h^{m+1} f) <= 1/|h(x0)| for m = 0..mMax together
/// with the side property that |h| is nondecreasing along the maximizers.
/// f and h must carry compatible mixed-factor orientations.
CptReport cpt_ratio_check(const SphereMonomial& f, const SphereMonomial& h, int mMax,
                          const SupNormConfig& cfg = {}, double tol = 1e-8);

}  // namespace qsphere::supnorm
