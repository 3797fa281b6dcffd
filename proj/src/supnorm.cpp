// SPDX-License-Identifier: Apache-2.0
#include "qsphere/supnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qsphere::supnorm {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double ipow(double base, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

struct Axis {
  double lo = 0.0;
  double hi = kHalfPi;
  double spacing(int points) const { return (hi - lo) / static_cast<double>(points - 1); }
  double at(int i, int points) const {
    return lo + spacing(points) * static_cast<double>(i);
  }
};

// sin(angle)^e1 * cos(angle)^e2.
struct AngleProfile {
  int e1 = 0;
  int e2 = 0;
  double at(double angle) const {
    return ipow(std::sin(angle), e1) * ipow(std::cos(angle), e2);
  }
};

constexpr double kTieBand = 1e-12;  // relative value band treated as a tie

// On the slice both angle profiles factor, so each axis is scanned on its
// own; the first maximal index wins, matching a row-major scan of the full
// product grid.  When a preference profile is supplied, value ties within
// the tie band are broken toward larger preference values, which lets a
// caller pick among equal maximizers.
int scan_axis(const Axis& axis, int points, const AngleProfile& value,
              const AngleProfile* preference) {
  int best = 0;
  double bestVal = value.at(axis.at(0, points));
  double bestPref = preference ? preference->at(axis.at(0, points)) : 0.0;
  for (int i = 1; i < points; ++i) {
    const double v = value.at(axis.at(i, points));
    if (v > bestVal) {
      if (preference && v <= bestVal * (1.0 + kTieBand)) {
        const double p = preference->at(axis.at(i, points));
        bestVal = v;
        if (p > bestPref) {
          bestPref = p;
          best = i;
        }
        continue;
      }
      bestVal = v;
      best = i;
      if (preference) bestPref = preference->at(axis.at(i, points));
    } else if (preference && v >= bestVal * (1.0 - kTieBand)) {
      const double p = preference->at(axis.at(i, points));
      if (p > bestPref) {
        bestPref = p;
        best = i;
      }
    }
  }
  return best;
}

Axis refine_around(const Axis& axis, int best, int points) {
  const double h = axis.spacing(points);
  const double center = axis.at(best, points);
  Axis next;
  next.lo = std::max(0.0, center - 2.0 * h);
  next.hi = std::min(kHalfPi, center + 2.0 * h);
  return next;
}

struct SliceBest {
  double psi = 0;
  double theta = 0;
};

// The mixed factor satisfies x*w + y*z <= sqrt(x^2+y^2) * sqrt(z^2+w^2) with
// equality when (x,y) is parallel to (w,z), and aligning costs nothing for
// the solo z, w factors.  Parameterise the aligned set by psi (the split
// between the two 2-vectors) and theta (the direction of (z,w)):
//   z = sin(psi) sin(theta),  w = sin(psi) cos(theta),
//   x = cos(psi) cos(theta),  y = cos(psi) sin(theta),
// giving the separable objective
//   sin(psi)^(a+b+c) cos(psi)^c * sin(theta)^a cos(theta)^b.
// The swapped orientation aligns (x,y) with (z,w) instead, which only
// exchanges x and y in the ambient point.
//
// A compatible preference monomial separates the same way, so tie-breaking
// toward it also works per axis.
SliceBest slice_search(int a, int b, int c, const SupNormConfig& cfg,
                       const SphereMonomial* preference = nullptr) {
  const int points = cfg.slicePoints;
  const AngleProfile psiValue{a + b + c, c};
  const AngleProfile thetaValue{a, b};
  AngleProfile psiPref, thetaPref;
  if (preference) {
    psiPref = {preference->zExp + preference->wExp + preference->mixExp,
               preference->mixExp};
    thetaPref = {preference->zExp, preference->wExp};
  }
  Axis psiAxis, thetaAxis;
  int psiBest = 0, thetaBest = 0;
  for (int round = 0; round <= cfg.refineRounds; ++round) {
    psiBest = scan_axis(psiAxis, points, psiValue, preference ? &psiPref : nullptr);
    thetaBest = scan_axis(thetaAxis, points, thetaValue, preference ? &thetaPref : nullptr);
    if (round < cfg.refineRounds) {
      psiAxis = refine_around(psiAxis, psiBest, points);
      thetaAxis = refine_around(thetaAxis, thetaBest, points);
    }
  }
  return SliceBest{psiAxis.at(psiBest, points), thetaAxis.at(thetaBest, points)};
}

ThetaPoint slice_point(const SphereMonomial& m, const SliceBest& s) {
  const double sp = std::sin(s.psi), cp = std::cos(s.psi);
  const double st = std::sin(s.theta), ct = std::cos(s.theta);
  ThetaPoint p;
  p.z = sp * st;
  p.w = sp * ct;
  if (m.mixSwapsXY) {
    p.x = cp * st;
    p.y = cp * ct;
  } else {
    p.x = cp * ct;
    p.y = cp * st;
  }
  return p;
}

// Full-octant cross-check on three spherical angles; the parameterisation
// satisfies the sphere constraint by construction.
double cube_best(const SphereMonomial& m, int points) {
  std::vector<double> s(static_cast<size_t>(points)), c(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double ang = kHalfPi * static_cast<double>(i) / static_cast<double>(points - 1);
    s[static_cast<size_t>(i)] = std::sin(ang);
    c[static_cast<size_t>(i)] = std::cos(ang);
  }
  double best = 0.0;
  ThetaPoint p;
  for (int i = 0; i < points; ++i) {
    p.x = c[static_cast<size_t>(i)];
    const double sa = s[static_cast<size_t>(i)];
    for (int j = 0; j < points; ++j) {
      p.y = sa * c[static_cast<size_t>(j)];
      const double sab = sa * s[static_cast<size_t>(j)];
      for (int k = 0; k < points; ++k) {
        p.z = sab * c[static_cast<size_t>(k)];
        p.w = sab * s[static_cast<size_t>(k)];
        best = std::max(best, m.eval(p));
      }
    }
  }
  return best;
}

void validate_config(const SupNormConfig& cfg) {
  if (cfg.slicePoints < 8 || cfg.cubePoints < 4 || cfg.refineRounds < 0) {
    throw std::domain_error("sup-norm grid configuration out of range");
  }
}

void validate_exponents(const SphereMonomial& m) {
  if (m.zExp < 0 || m.wExp < 0 || m.mixExp < 0) {
    throw std::domain_error("surrogate exponents must be nonnegative");
  }
}

}  // namespace

bool ThetaPoint::in_theta(double tol) const {
  const auto ok = [](double v) { return v >= 0.0 && v <= 1.0; };
  return ok(x) && ok(y) && ok(z) && ok(w) && std::abs(sum_squares() - 1.0) <= tol;
}

ThetaPoint require_in_theta(const ThetaPoint& p, double tol) {
  if (!p.in_theta(tol)) {
    throw std::domain_error("point is not on the nonnegative unit-sphere octant");
  }
  return p;
}

SphereMonomial SphereMonomial::surrogate(const GammaIndex& g) {
  require_in_gamma(g);
  return SphereMonomial{g.g3, g.g1 - g.g2 - g.g3, g.g2, false};
}

SphereMonomial SphereMonomial::cross_term(int m, int n) {
  if (m < 0 || n < 0 || (m == 0 && n == 0)) {
    throw std::domain_error("cross term needs nonnegative (m,n) != (0,0)");
  }
  return SphereMonomial{n, n, m, true};
}

double SphereMonomial::eval(const ThetaPoint& p) const {
  const double mix = mixSwapsXY ? p.x * p.z + p.y * p.w : p.x * p.w + p.y * p.z;
  return ipow(p.z, zExp) * ipow(p.w, wExp) * ipow(mix, mixExp);
}

double eval_g(const GammaIndex& g, const ThetaPoint& p) {
  return SphereMonomial::surrogate(g).eval(require_in_theta(p));
}

namespace {

SupNormResult finish_search(const SphereMonomial& target, const SupNormConfig& cfg,
                            const SphereMonomial* preference) {
  validate_exponents(target);
  validate_config(cfg);
  const SliceBest best =
      slice_search(target.zExp, target.wExp, target.mixExp, cfg, preference);
  SupNormResult result;
  result.argmax = slice_point(target, best);
  result.value = target.eval(result.argmax);
  result.cubeBest = cube_best(target, cfg.cubePoints);
  if (result.cubeBest > result.value + cfg.crossTolerance) {
    throw SymmetryCheckError(
        "octant grid beats the reduced slice by more than the tolerance: slice " +
        std::to_string(result.value) + " vs grid " + std::to_string(result.cubeBest) +
        " for exponents (" + std::to_string(target.zExp) + "," +
        std::to_string(target.wExp) + "," + std::to_string(target.mixExp) + ")");
  }
  return result;
}

}  // namespace

SupNormResult sup_norm(const SphereMonomial& target, const SupNormConfig& cfg) {
  return finish_search(target, cfg, nullptr);
}

ThetaPoint theta_maximizer(int m, int n) {
  if (m < 0 || n < 0 || (m == 0 && n == 0)) {
    throw std::domain_error("maximizer needs nonnegative (m,n) != (0,0)");
  }
  const double denom = 2.0 * std::sqrt(static_cast<double>(n + m));
  ThetaPoint p;
  p.x = p.y = std::sqrt(static_cast<double>(m)) / denom;
  p.z = p.w = std::sqrt(static_cast<double>(2 * n + m)) / denom;
  return p;
}

GammaIndex ratio_step(int part, const GammaIndex& g) {
  switch (part) {
    case 1:
      return GammaIndex{g.g1 + 1, g.g2 + 1, g.g3};
    case 2:
      return GammaIndex{g.g1 + 2, g.g2, g.g3 + 1};
    case 3:
      return GammaIndex{g.g1 + 1, g.g2, g.g3};
    case 4:
      return GammaIndex{g.g1 + 1, g.g2, g.g3 + 1};
    default:
      throw std::domain_error("ratio part must be 1..4");
  }
}

double ratio_bound(int part, const GammaIndex& g, const SupNormConfig& cfg) {
  require_in_gamma(g);
  if (!region_predicate(part, g)) {
    throw std::domain_error("gamma " + g.str() + " is outside the region of part " +
                            std::to_string(part));
  }
  const GammaIndex next = require_in_gamma(ratio_step(part, g));
  const double numer = sup_norm(SphereMonomial::surrogate(g), cfg).value;
  const double denom = sup_norm(SphereMonomial::surrogate(next), cfg).value;
  return numer / denom;
}

namespace {

SphereMonomial stacked(const SphereMonomial& f, const SphereMonomial& h, int m) {
  if (f.mixExp > 0 && h.mixExp > 0 && f.mixSwapsXY != h.mixSwapsXY) {
    throw std::invalid_argument("f and h carry incompatible mixed-factor orientations");
  }
  const bool swap = f.mixExp > 0 ? f.mixSwapsXY : h.mixSwapsXY;
  return SphereMonomial{f.zExp + m * h.zExp, f.wExp + m * h.wExp, f.mixExp + m * h.mixExp,
                        swap};
}

}  // namespace

CptReport cpt_ratio_check(const SphereMonomial& f, const SphereMonomial& h, int mMax,
                          const SupNormConfig& cfg, double tol) {
  validate_exponents(f);
  validate_exponents(h);
  if (mMax < 0) throw std::domain_error("mMax must be nonnegative");

  CptReport report;
  // Among equal maximizers of h^m f the search prefers points where |h| is
  // largest; the inequality holds for any maximizer choice, and this choice
  // keeps the reported bound meaningful when h vanishes on part of the
  // maximizer set.
  const SupNormResult base = finish_search(stacked(f, h, 0), cfg, &h);
  report.fMaximizer = base.argmax;
  report.hAtFMaximizer = std::abs(h.eval(base.argmax));
  if (!(base.value > 0.0) || report.hAtFMaximizer <= 1e-12) {
    report.preconditionMet = false;
    return report;
  }
  report.preconditionMet = true;
  report.bound = 1.0 / report.hAtFMaximizer;

  std::vector<double> sups;
  for (int m = 0; m <= mMax + 1; ++m) {
    const SupNormResult r = finish_search(stacked(f, h, m), cfg, &h);
    sups.push_back(r.value);
    report.hAtArgmax.push_back(std::abs(h.eval(r.argmax)));
  }
  report.inequalityHolds = true;
  for (int m = 0; m <= mMax; ++m) {
    const double ratio = sups[static_cast<size_t>(m)] / sups[static_cast<size_t>(m) + 1];
    report.ratios.push_back(ratio);
    report.inequalityHolds = report.inequalityHolds && ratio <= report.bound + tol;
  }
  report.monotoneH = true;
  for (size_t m = 0; m + 1 < report.hAtArgmax.size(); ++m) {
    report.monotoneH =
        report.monotoneH && report.hAtArgmax[m + 1] >= report.hAtArgmax[m] - tol;
  }
  return report;
}

}  // namespace qsphere::supnorm
