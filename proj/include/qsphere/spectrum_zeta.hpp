// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qsphere/bigint.hpp"
#include "qsphere/rep_core.hpp"

namespace qsphere::spectrum {

struct UnsupportedRankError : std::domain_error {
  using std::domain_error::domain_error;
};
struct InsufficientSamplesError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPolynomialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One eigenvalue level of the equivariant Dirac operator: eigenvalue k with
/// total multiplicity M(k) summed over all blocks gamma with g1 == k.
struct SpectrumLevel {
  int eigenvalue = 0;
  BigInt multiplicity;
};

/// M(k) = sum over g2 of (k - g2 + 1) * dim(k, g2, 0, ..., 0).
SpectrumLevel level_multiplicity(int n, int k);

/// Levels 0..kMax in one pass (shared rank denominator, same values as
/// level_multiplicity).
std::vector<SpectrumLevel> level_table(int n, int kMax);

/// Least p such that the (p+1)-th forward difference of the samples is
/// identically zero while the p-th is a nonzero constant.
int sequence_degree(std::span<const BigInt> samples);

/// Exact degree of k -> M(k); expected 4n - 2.
int multiplicity_polynomial_degree(int n, int kMax);

/// Single term M * k^(-delta), evaluated with the multiplicity split into
/// mantissa * 2^exp so wide integers never overflow the double range.
double zeta_term(const BigInt& multiplicity, int k, double delta);

/// Compensated sum of M(k) * k^(-delta) over kFrom < k <= kTo.  Summing the
/// window directly keeps small tails meaningful instead of cancelling two
/// large partial sums.
double zeta_window_sum(std::span<const SpectrumLevel> levels, double delta, int kFrom,
                       int kTo);

/// Compensated sum of M(k) * k^(-delta) for k = 1..K.  The k = 0 kernel block
/// is excluded.  The span form requires levels to cover eigenvalues 0..K.
double zeta_partial_sum(std::span<const SpectrumLevel> levels, double delta, int K);
double zeta_partial_sum(int n, double delta, int K);

struct ZetaSample {
  double delta = 0;
  int cutoff = 0;
  double value = 0;
};

struct SummabilityReport {
  int rank = 0;
  int polynomialDegree = 0;
  int spectralDimension = 0;  // always polynomialDegree + 1
  std::vector<ZetaSample> partialSums;

  // Divergence evidence at delta = 4n - 2: the sums over consecutive
  // doubling windows (K, 2K] keep growing by at least the threshold factor.
  // Window sums see the asymptotic per-term constant directly and are not
  // masked by the small-k transient of the full partial sums.
  double windowGrowthMin = 0;
  bool divergenceEvidence = false;

  // Convergence evidence at delta = 4n: the tail between the two largest
  // doubled cutoffs (tailK, 2*tailK) stays below the integral-comparison
  // bound tailConstant * M(tailK) * tailK^(1-delta) / (delta - (4n-1)).
  int tailK = 0;
  BigInt tailMultiplicity;
  double tailObserved = 0;
  double tailBound = 0;
  double tailConstant = 0;
  bool convergenceEvidence = false;

  bool degreeMatchesRank = false;  // polynomialDegree == 4n - 2
};

struct SpectralConfig {
  int kMax = 0;                  // 0 -> 4n + 8
  std::vector<int> zetaCutoffs;  // empty -> default_zeta_cutoffs(n)
};

/// Doubling cutoffs for the zeta evidence.  Ranks up to 5 start at 125; at
/// rank 6 the degree-22 multiplicity polynomial needs K >= 250 before the
/// doubling windows grow at the threshold rate.
std::vector<int> default_zeta_cutoffs(int n);

/// Full summability analysis for rank n in 2..6.
SummabilityReport spectral_dimension(int n, const SpectralConfig& cfg = {});

/// Growth threshold used for the doubling divergence evidence.
inline constexpr double kDivergenceGrowthFactor = 1.5;
/// Slack constant in the integral-comparison tail bound.
inline constexpr double kTailComparisonConstant = 2.0;

}  // namespace qsphere::spectrum
