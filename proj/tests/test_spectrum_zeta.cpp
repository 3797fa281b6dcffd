// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracle_weyl.hpp"
#include "qsphere/spectrum_zeta.hpp"

using namespace qsphere;
namespace sz = qsphere::spectrum;

TEST_CASE("level multiplicities for rank 2") {
  CHECK(sz::level_multiplicity(2, 0).multiplicity == 1);

  // M(1) = 2*dim(1,0) + 1*dim(1,1), dimensions from the character oracle.
  const BigInt m1 = 2 * oracle::weyl_dimension_by_character(2, {1, 0}) +
                    oracle::weyl_dimension_by_character(2, {1, 1});
  CHECK(sz::level_multiplicity(2, 1).multiplicity == m1);
  CHECK(m1 == 13);

  const BigInt m2 = 3 * oracle::weyl_dimension_by_character(2, {2, 0}) +
                    2 * oracle::weyl_dimension_by_character(2, {2, 1}) +
                    oracle::weyl_dimension_by_character(2, {2, 2});
  CHECK(sz::level_multiplicity(2, 2).multiplicity == m2);
  CHECK(m2 == 76);

  CHECK_THROWS_AS(sz::level_multiplicity(1, 3), sz::UnsupportedRankError);
}

TEST_CASE("level multiplicity agrees with the gamma-level enumeration") {
  for (int n : {2, 3}) {
    for (int k = 0; k <= 50; ++k) {
      BigInt bruteForce = 0;
      for (const auto& g : rep::gamma_level(k)) {
        std::vector<int> entries(static_cast<size_t>(n), 0);
        entries[0] = g.g1;
        entries[1] = g.g2;
        bruteForce += rep::weyl_dimension(n, rep::HighestWeight(entries));
      }
      CHECK(sz::level_multiplicity(n, k).multiplicity == bruteForce);
    }
  }
}

TEST_CASE("level table matches per-level calls") {
  for (int n : {2, 4}) {
    const auto table = sz::level_table(n, 12);
    REQUIRE(table.size() == 13);
    for (const auto& lvl : table) {
      CHECK(lvl.multiplicity == sz::level_multiplicity(n, lvl.eigenvalue).multiplicity);
      CHECK(lvl.multiplicity >= 1);
    }
  }
}

TEST_CASE("sequence degree detection") {
  const auto degree_of = [](std::vector<long> v) {
    std::vector<BigInt> samples;
    for (long x : v) samples.emplace_back(x);
    return sz::sequence_degree(samples);
  };
  CHECK(degree_of({1, 1, 1, 1, 1}) == 0);
  CHECK(degree_of({3, 5, 7, 9, 11, 13}) == 1);
  CHECK(degree_of({0, 1, 4, 9, 16, 25, 36}) == 2);
  CHECK_THROWS_AS(degree_of({7}), sz::InsufficientSamplesError);
  CHECK_THROWS_AS(degree_of({1, 2, 4, 8, 16, 32}), sz::NonPolynomialError);
  CHECK_THROWS_AS(degree_of({0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("multiplicity degree is 4n-2") {
  CHECK(sz::multiplicity_polynomial_degree(2, 12) == 6);
  CHECK(sz::multiplicity_polynomial_degree(3, 16) == 10);
  CHECK_THROWS_AS(sz::multiplicity_polynomial_degree(2, 8), sz::InsufficientSamplesError);
}

TEST_CASE("zeta terms with wide multiplicities") {
  BigInt big = 1;
  mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), 400);  // 2^400
  CHECK(sz::zeta_term(big, 2, 400.0) == 1.0);
  CHECK(sz::zeta_term(BigInt(13), 1, 10.0) == 13.0);
  CHECK(sz::zeta_term(BigInt(0), 5, 3.0) == 0.0);
}

TEST_CASE("zeta partial sums") {
  CHECK(sz::zeta_partial_sum(2, 7.5, 0) == 0.0);
  CHECK(sz::zeta_partial_sum(2, 10.0, 1) == 13.0);
  // 13 + 76 * 2^-8 is exact in binary.
  CHECK(sz::zeta_partial_sum(2, 8.0, 2) == 13.296875);
  CHECK_THROWS_AS(sz::zeta_partial_sum(2, 0.0, 4), std::domain_error);
  CHECK_THROWS_AS(sz::zeta_partial_sum(2, 1.0, -1), std::domain_error);
}

TEST_CASE("window sums compose into partial sums") {
  const auto levels = sz::level_table(2, 128);
  const double a = sz::zeta_window_sum(levels, 7.0, 0, 64);
  const double b = sz::zeta_window_sum(levels, 7.0, 64, 128);
  CHECK(sz::zeta_partial_sum(levels, 7.0, 128) == doctest::Approx(a + b).epsilon(1e-14));
  CHECK_THROWS_AS(sz::zeta_window_sum(levels, 7.0, 64, 32), std::domain_error);
}

TEST_CASE("zeta partial sums are monotone in the cutoff") {
  const auto levels = sz::level_table(2, 64);
  for (double delta : {3.0, 7.0, 8.5}) {
    double prev = 0;
    for (int K = 0; K <= 64; K += 4) {
      const double v = sz::zeta_partial_sum(levels, delta, K);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("doubling the cutoff at delta = 4n stays under the comparison bound") {
  const int n = 2;
  const double delta = 4.0 * n;
  const auto levels = sz::level_table(n, 512);
  for (int K : {64, 128, 256}) {
    const double tail = sz::zeta_window_sum(levels, delta, K, 2 * K);
    const double bound =
        sz::kTailComparisonConstant *
        sz::zeta_term(levels[static_cast<size_t>(K)].multiplicity, K, delta) *
        static_cast<double>(K) / (delta - static_cast<double>(4 * n - 1));
    CHECK(tail >= 0);
    CHECK(tail <= bound);
  }
}

TEST_CASE("spectral dimension reports") {
  sz::SpectralConfig cfg;
  cfg.zetaCutoffs = {125, 250, 500};
  for (int n : {2, 3}) {
    const auto rep = sz::spectral_dimension(n, cfg);
    CHECK(rep.polynomialDegree == 4 * n - 2);
    CHECK(rep.spectralDimension == 4 * n - 1);
    CHECK(rep.spectralDimension == rep.polynomialDegree + 1);
    CHECK(rep.degreeMatchesRank);
    CHECK(rep.windowGrowthMin >= 1.5);
    CHECK(rep.divergenceEvidence);
    CHECK(rep.convergenceEvidence);
    CHECK(rep.partialSums.size() == 6);
  }
  CHECK_THROWS_AS(sz::spectral_dimension(1), sz::UnsupportedRankError);
  CHECK_THROWS_AS(sz::spectral_dimension(7), sz::UnsupportedRankError);
}
