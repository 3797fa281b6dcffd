// SPDX-License-Identifier: Apache-2.0
#include "qsphere/spectrum_zeta.hpp"

#include <algorithm>
#include <cmath>

namespace qsphere::spectrum {

namespace {

void require_rank(int n) {
  if (n < 2) {
    throw UnsupportedRankError("quaternion sphere needs rank n >= 2, got " +
                               std::to_string(n));
  }
}

std::vector<int> two_row_weight(int n, int a, int b) {
  std::vector<int> entries(static_cast<size_t>(n), 0);
  entries[0] = a;
  entries[1] = b;
  return entries;
}


}  // namespace

// The multiplicity is split into mantissa * 2^exp so the term never leaves
// the double range even when M(k) has hundreds of bits.
double zeta_term(const BigInt& multiplicity, int k, double delta) {
  signed long exp2part = 0;
  const double mantissa = mpz_get_d_2exp(&exp2part, multiplicity.get_mpz_t());
  const double scaled = mantissa * std::pow(static_cast<double>(k), -delta);
  if (scaled > 0.0) return std::ldexp(scaled, static_cast<int>(exp2part));
  if (multiplicity == 0) return 0.0;
  // pow underflowed; retry fully in log2 space.
  const double log2term = std::log2(mantissa) + static_cast<double>(exp2part) -
                          delta * std::log2(static_cast<double>(k));
  return log2term > -1074.0 ? std::exp2(log2term) : 0.0;
}

SpectrumLevel level_multiplicity(int n, int k) {
  require_rank(n);
  if (k < 0) throw std::domain_error("eigenvalue level must be nonnegative");
  BigInt total = 0;
  for (int g2 = 0; g2 <= k; ++g2) {
    total += (k - g2 + 1) * rep::weyl_dimension(n, rep::HighestWeight(two_row_weight(n, k, g2)));
  }
  return SpectrumLevel{k, total};
}

std::vector<SpectrumLevel> level_table(int n, int kMax) {
  require_rank(n);
  if (kMax < 0) throw std::domain_error("kMax must be nonnegative");
  const BigInt den = rep::detail::weyl_product_denominator(n);
  std::vector<SpectrumLevel> levels;
  levels.reserve(static_cast<size_t>(kMax) + 1);
  BigInt dim;
  for (int k = 0; k <= kMax; ++k) {
    BigInt total = 0;
    for (int g2 = 0; g2 <= k; ++g2) {
      const BigInt num = rep::detail::weyl_product_numerator(n, two_row_weight(n, k, g2));
      mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      total += (k - g2 + 1) * dim;
    }
    levels.push_back(SpectrumLevel{k, total});
  }
  return levels;
}

int sequence_degree(std::span<const BigInt> samples) {
  if (samples.size() < 2) {
    throw InsufficientSamplesError("need at least two samples to difference");
  }
  std::vector<BigInt> row(samples.begin(), samples.end());
  const auto all_zero = [](const std::vector<BigInt>& r) {
    return std::all_of(r.begin(), r.end(), [](const BigInt& v) { return v == 0; });
  };
  if (all_zero(row)) {
    throw std::domain_error("all-zero sequence has no detectable degree");
  }
  for (int p = 0; row.size() >= 2; ++p) {
    std::vector<BigInt> next(row.size() - 1);
    for (size_t i = 0; i + 1 < row.size(); ++i) next[i] = row[i + 1] - row[i];
    if (all_zero(next)) {
      // next == 0 makes row a constant; the nonzero check is the degree claim.
      if (row[0] == 0) {
        throw std::domain_error("all-zero sequence has no detectable degree");
      }
      return p;
    }
    row = std::move(next);
  }
  throw NonPolynomialError("forward differences never vanish within the sample window");
}

int multiplicity_polynomial_degree(int n, int kMax) {
  require_rank(n);
  if (kMax < 4 * n + 2) {
    throw InsufficientSamplesError("kMax must be at least 4n+2 = " +
                                   std::to_string(4 * n + 2) + ", got " +
                                   std::to_string(kMax));
  }
  const auto levels = level_table(n, kMax);
  std::vector<BigInt> samples;
  samples.reserve(levels.size());
  for (const auto& lvl : levels) samples.push_back(lvl.multiplicity);
  return sequence_degree(samples);
}

double zeta_window_sum(std::span<const SpectrumLevel> levels, double delta, int kFrom,
                       int kTo) {
  if (!(delta > 0.0)) throw std::domain_error("delta must be positive");
  if (kFrom < 0 || kTo < kFrom) throw std::domain_error("invalid summation window");
  if (static_cast<size_t>(kTo) >= levels.size() && kTo > 0) {
    throw std::invalid_argument("level table does not cover cutoff " + std::to_string(kTo));
  }
  // Neumaier compensation; terms are summed in a fixed order.
  double sum = 0.0;
  double comp = 0.0;
  for (int k = std::max(kFrom, 0) + 1; k <= kTo; ++k) {
    const double t = zeta_term(levels[static_cast<size_t>(k)].multiplicity, k, delta);
    const double s = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      comp += (sum - s) + t;
    } else {
      comp += (t - s) + sum;
    }
    sum = s;
  }
  return sum + comp;
}

double zeta_partial_sum(std::span<const SpectrumLevel> levels, double delta, int K) {
  return zeta_window_sum(levels, delta, 0, K);
}

double zeta_partial_sum(int n, double delta, int K) {
  const auto levels = level_table(n, std::max(K, 0));
  return zeta_partial_sum(levels, delta, K);
}

std::vector<int> default_zeta_cutoffs(int n) {
  if (n >= 6) return {250, 500, 1000, 2000};
  return {125, 250, 500, 1000, 2000};
}

SummabilityReport spectral_dimension(int n, const SpectralConfig& cfg) {
  require_rank(n);
  if (n > 6) throw UnsupportedRankError("ranks above 6 are out of the desk-scale range");

  SummabilityReport report;
  report.rank = n;
  report.tailConstant = kTailComparisonConstant;

  const int kMax = cfg.kMax > 0 ? cfg.kMax : 4 * n + 8;
  {
    const auto levels = level_table(n, kMax);
    std::vector<BigInt> samples;
    samples.reserve(levels.size());
    for (const auto& lvl : levels) samples.push_back(lvl.multiplicity);
    report.polynomialDegree = sequence_degree(samples);
  }
  report.spectralDimension = report.polynomialDegree + 1;
  report.degreeMatchesRank = report.polynomialDegree == 4 * n - 2;

  std::vector<int> cutoffs = cfg.zetaCutoffs;
  if (cutoffs.empty()) cutoffs = default_zeta_cutoffs(n);
  std::sort(cutoffs.begin(), cutoffs.end());
  cutoffs.erase(std::unique(cutoffs.begin(), cutoffs.end()), cutoffs.end());

  const double deltaDiverge = static_cast<double>(4 * n - 2);
  const double deltaConverge = static_cast<double>(4 * n);
  const auto levels = level_table(n, cutoffs.empty() ? 0 : cutoffs.back());

  for (int K : cutoffs) {
    report.partialSums.push_back(ZetaSample{deltaDiverge, K, zeta_partial_sum(levels, deltaDiverge, K)});
  }
  for (int K : cutoffs) {
    report.partialSums.push_back(ZetaSample{deltaConverge, K, zeta_partial_sum(levels, deltaConverge, K)});
  }

  // Consecutive doubling windows drive both verdicts.
  report.windowGrowthMin = 0.0;
  bool sawRatio = false;
  bool allGrow = true;
  int lastPair = -1;
  for (size_t i = 0; i + 1 < cutoffs.size(); ++i) {
    if (cutoffs[i + 1] != 2 * cutoffs[i]) continue;
    lastPair = static_cast<int>(i);
    if (i + 2 < cutoffs.size() && cutoffs[i + 2] == 2 * cutoffs[i + 1]) {
      const double w1 = zeta_window_sum(levels, deltaDiverge, cutoffs[i], cutoffs[i + 1]);
      const double w2 =
          zeta_window_sum(levels, deltaDiverge, cutoffs[i + 1], cutoffs[i + 2]);
      const double ratio = w1 > 0 ? w2 / w1 : 0.0;
      if (!sawRatio || ratio < report.windowGrowthMin) report.windowGrowthMin = ratio;
      sawRatio = true;
      allGrow = allGrow && ratio >= kDivergenceGrowthFactor;
    }
  }
  report.divergenceEvidence = sawRatio && allGrow;

  if (lastPair >= 0) {
    const int K = cutoffs[static_cast<size_t>(lastPair)];
    report.tailK = K;
    report.tailMultiplicity = levels[static_cast<size_t>(K)].multiplicity;
    report.tailObserved = zeta_window_sum(levels, deltaConverge, K, 2 * K);
    report.tailBound = kTailComparisonConstant *
                       zeta_term(report.tailMultiplicity, K, deltaConverge) *
                       static_cast<double>(K) /
                       (deltaConverge - static_cast<double>(4 * n - 1));
    report.convergenceEvidence =
        report.tailObserved >= 0 && report.tailObserved <= report.tailBound;
  }
  return report;
}

}  // namespace qsphere::spectrum
