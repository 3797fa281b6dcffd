// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "oracle_weyl.hpp"
#include "qsphere/rep_core.hpp"

using namespace qsphere;
using rep::HighestWeight;

TEST_CASE("highest weight validation") {
  CHECK_THROWS_AS(HighestWeight({0, 1}), std::domain_error);
  CHECK_THROWS_AS(HighestWeight({2, -1}), std::domain_error);
  CHECK_THROWS_AS(HighestWeight({}), std::domain_error);
  CHECK(HighestWeight({3, 1}).rank() == 2);
  CHECK(HighestWeight::zero(4).is_zero());
}

TEST_CASE("character oracle reproduces the known small dimensions") {
  CHECK(oracle::weyl_dimension_by_character(2, {0, 0}) == 1);
  CHECK(oracle::weyl_dimension_by_character(2, {1, 0}) == 4);  // defining rep has dim 2n
  CHECK(oracle::weyl_dimension_by_character(1, {3}) == 4);
  CHECK(oracle::weyl_dimension_by_character(3, {0, 0, 0}) == 1);
  CHECK(oracle::weyl_dimension_by_character(3, {1, 0, 0}) == 6);
}

TEST_CASE("weyl dimension matches the character oracle") {
  // Frozen values, each produced by the alternant oracle.
  const std::vector<std::pair<std::vector<int>, long>> frozen = {
      {{0, 0}, 1}, {{1, 0}, 4}, {{1, 1}, 5}, {{2, 0}, 10}, {{2, 1}, 16}, {{2, 2}, 14}};
  for (const auto& [entries, expected] : frozen) {
    const BigInt dim = rep::weyl_dimension(2, HighestWeight(entries));
    CHECK(dim == expected);
    CHECK(dim == oracle::weyl_dimension_by_character(2, entries));
  }
  for (const auto& lambda : rep::dominant_weights_up_to(3, 3)) {
    CHECK(rep::weyl_dimension(3, lambda) ==
          oracle::weyl_dimension_by_character(3, lambda.entries()));
  }
}

TEST_CASE("weyl dimension of the trivial weight is 1 for every rank") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(rep::weyl_dimension(n, HighestWeight::zero(n)) == 1);
  }
}

TEST_CASE("weyl dimension asymptotics in (l1, l2) follow l1^(2n-1) l2^(2n-3)") {
  // Doubling l1 at large scale multiplies the dimension by ~2^(2n-1).
  for (int n : {2, 3}) {
    const auto dim = [n](int a, int b) {
      std::vector<int> e(static_cast<size_t>(n), 0);
      e[0] = a;
      e[1] = b;
      return rep::weyl_dimension(n, HighestWeight(e));
    };
    const double r1 = BigRat(dim(4000, 10), dim(2000, 10)).get_d();
    CHECK(r1 == doctest::Approx(std::pow(2.0, 2 * n - 1)).epsilon(0.02));
    // The second-entry power needs l2 << l1 to show cleanly.
    const double r2 = BigRat(dim(1000000, 2000), dim(1000000, 1000)).get_d();
    CHECK(r2 == doctest::Approx(std::pow(2.0, 2 * n - 3)).epsilon(0.02));
  }
}

TEST_CASE("weyl dimension rejects rank mismatches") {
  CHECK_THROWS_AS(rep::weyl_dimension(3, HighestWeight({1, 0})), std::domain_error);
  CHECK_THROWS_AS(rep::weyl_dimension(0, HighestWeight({1})), std::domain_error);
}

TEST_CASE("trivial isotypic multiplicity") {
  CHECK(rep::trivial_isotypic_multiplicity(HighestWeight({3, 1, 0, 0})) == 3);
  CHECK(rep::trivial_isotypic_multiplicity(HighestWeight({0, 0})) == 1);
  CHECK(rep::trivial_isotypic_multiplicity(HighestWeight({1, 1, 1, 0})) == 0);
  CHECK_THROWS_AS(rep::trivial_isotypic_multiplicity(HighestWeight({2})), std::domain_error);
}

TEST_CASE("branching multiplicity examples") {
  CHECK(rep::branching_multiplicity(HighestWeight({1, 0}), HighestWeight({0})) == 2);
  CHECK(rep::branching_multiplicity(HighestWeight({0, 0}), HighestWeight({0})) == 1);
  CHECK_THROWS_AS(rep::branching_multiplicity(HighestWeight({1, 0}), HighestWeight({1, 0})),
                  std::domain_error);

  // (1,1) restricted: multiplicities must weight rank-1 dimensions to 5.
  BigInt total = 0;
  for (const auto& mu : rep::dominant_weights_up_to(1, 2)) {
    total += rep::branching_multiplicity(HighestWeight({1, 1}), mu) *
             rep::weyl_dimension(1, mu);
  }
  CHECK(total == 5);
  CHECK(rep::branching_multiplicity(HighestWeight({1, 1}), HighestWeight({2})) == 0);
}

TEST_CASE("branching satisfies the dimension-sum identity") {
  for (int n : {2, 3}) {
    for (const auto& lambda : rep::dominant_weights_up_to(n, 3)) {
      BigInt total = 0;
      for (const auto& mu : rep::dominant_weights_up_to(n - 1, lambda.at(0))) {
        total += rep::branching_multiplicity(lambda, mu) * rep::weyl_dimension(n - 1, mu);
      }
      CHECK(total == rep::weyl_dimension(n, lambda));
    }
  }
}

TEST_CASE("branching to the zero weight reproduces the isotypic formula") {
  for (int n : {2, 3}) {
    for (const auto& lambda : rep::dominant_weights_up_to(n, 5)) {
      CHECK(rep::branching_multiplicity(lambda, HighestWeight::zero(n - 1)) ==
            rep::trivial_isotypic_multiplicity(lambda));
    }
  }
}

TEST_CASE("tensor with the defining representation") {
  const auto sorted = [](std::vector<std::vector<int>> v) {
    std::vector<HighestWeight> out;
    for (auto& e : v) out.emplace_back(e);
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto got = [](int n, std::vector<int> e) {
    auto v = rep::tensor_with_defining(n, HighestWeight(std::move(e)));
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(got(2, {1, 0}) == sorted({{2, 0}, {1, 1}, {0, 0}}));
  CHECK(got(2, {0, 0}) == sorted({{1, 0}}));
  CHECK(got(2, {1, 1}) == sorted({{2, 1}, {1, 0}}));
}

TEST_CASE("tensor decomposition dimension consistency and bounded leap") {
  for (int n : {2, 3}) {
    for (const auto& lambda : rep::dominant_weights_up_to(n, 4)) {
      BigInt total = 0;
      for (const auto& mu : rep::tensor_with_defining(n, lambda)) {
        total += rep::weyl_dimension(n, mu);
        CHECK(std::abs(mu.at(0) - lambda.at(0)) <= 1);
      }
      CHECK(total == 2 * n * rep::weyl_dimension(n, lambda));
    }
  }
}

TEST_CASE("gamma level enumeration") {
  CHECK(rep::gamma_level(0) == std::vector<GammaIndex>{GammaIndex{0, 0, 0}});
  CHECK(rep::gamma_level(1) == std::vector<GammaIndex>{GammaIndex{1, 0, 0},
                                                       GammaIndex{1, 0, 1},
                                                       GammaIndex{1, 1, 0}});
  CHECK(rep::gamma_level(2).size() == 6);
  for (int k = 0; k <= 100; ++k) {
    const auto level = rep::gamma_level(k);
    CHECK(static_cast<int>(level.size()) == (k + 1) * (k + 2) / 2);
    CHECK(std::is_sorted(level.begin(), level.end()));
    for (const auto& g : level) CHECK(g.valid());
  }
}
