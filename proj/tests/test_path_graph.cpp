// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>
#include <memory>
#include <random>

#include "doctest.h"
#include "qsphere/path_graph.hpp"

using namespace qsphere;
using namespace qsphere::paths;

TEST_CASE("move admissibility") {
  CHECK(apply_move(Move::AddE1E2, GammaIndex{2, 2, 0}) == GammaIndex{3, 3, 0});
  CHECK(apply_move(Move::Add2E1E3, GammaIndex{3, 1, 1}) == GammaIndex{5, 1, 2});
  CHECK_THROWS_AS(apply_move(Move::AddE1E2, GammaIndex{2, 1, 0}), std::domain_error);
  CHECK_THROWS_AS(apply_move(Move::AddE1, GammaIndex{2, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(apply_move(Move::AddE1, GammaIndex{1, 2, 0}), std::domain_error);
}

TEST_CASE("path construction examples") {
  const auto empty = build_path(GammaIndex{0, 0, 0});
  CHECK(empty.length == 0);
  CHECK(empty.waypoints.size() == 1);

  const auto p311 = build_path(GammaIndex{3, 1, 1});
  CHECK(p311.length == 2);
  CHECK(p311.waypoints ==
        std::vector<GammaIndex>{{0, 0, 0}, {1, 1, 0}, {3, 1, 1}});
  CHECK(p311.moves == std::vector<Move>{Move::AddE1E2, Move::Add2E1E3});

  const auto p202 = build_path(GammaIndex{2, 0, 2});
  CHECK(p202.length == 2);
  CHECK(p202.waypoints ==
        std::vector<GammaIndex>{{0, 0, 0}, {1, 0, 1}, {2, 0, 2}});
  CHECK(p202.moves == std::vector<Move>{Move::AddE1E3, Move::AddE1E3});

  CHECK_THROWS_AS(build_path(GammaIndex{1, 2, 0}), std::domain_error);
}

TEST_CASE("paths are valid and short for all targets up to g1 = 30") {
  // apply_move validates each step's region predicate and Gamma membership,
  // so build_path succeeding is already most of the claim.
  for (int g1 = 0; g1 <= 30; ++g1) {
    for (int g2 = 0; g2 <= g1; ++g2) {
      for (int g3 = 0; g3 <= g1 - g2; ++g3) {
        const auto path = build_path(GammaIndex{g1, g2, g3});
        CHECK(path.length <= g1);
        CHECK(path.waypoints.front() == GammaIndex{0, 0, 0});
        CHECK(path.waypoints.back() == GammaIndex{g1, g2, g3});
        CHECK(path.stageLengths[0] + path.stageLengths[1] + path.stageLengths[2] ==
              path.length);
      }
    }
  }
}

TEST_CASE("eigenvalue bound examples") {
  CHECK(eigenvalue_bound(-2.5, 3.0, GammaIndex{0, 0, 0}) == 2.5);
  CHECK(eigenvalue_bound(0.0, 3.0, GammaIndex{3, 1, 1}) == 6.0);
  for (int k = 1; k <= 8; ++k) {
    CHECK(eigenvalue_bound(0.0, 3.0, GammaIndex{k, k, 0}) == 3.0 * k);
  }
  CHECK_THROWS_AS(eigenvalue_bound(0.0, 0.0, GammaIndex{1, 0, 0}), std::domain_error);
}

TEST_CASE("step bounds for the equivariant assignment") {
  const auto deq = verify_step_bounds(
      [](const GammaIndex& g) { return static_cast<double>(g.g1); }, 20);
  CHECK(deq.supPerPart == std::array<double, 4>{1.0, 2.0, 1.0, 1.0});
  CHECK(deq.maxStep == 2.0);
  CHECK(deq.allFinite);

  const auto zero = verify_step_bounds([](const GammaIndex&) { return 0.0; }, 10);
  CHECK(zero.supPerPart == std::array<double, 4>{0.0, 0.0, 0.0, 0.0});
}

TEST_CASE("noisy assignments stay under the growth bound") {
  std::mt19937_64 rng(2718);
  const int cap = 20;
  for (int trial = 0; trial < 10; ++trial) {
    auto noise = std::make_shared<std::map<GammaIndex, double>>();
    for (int g1 = 0; g1 <= cap + 2; ++g1) {
      for (int g2 = 0; g2 <= g1; ++g2) {
        for (int g3 = 0; g3 <= g1 - g2; ++g3) {
          const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          (*noise)[GammaIndex{g1, g2, g3}] = -0.4 + 0.8 * u;
        }
      }
    }
    const DiracAssignment d = [noise](const GammaIndex& g) {
      return static_cast<double>(g.g1) + noise->at(g);
    };
    const auto bounds = verify_step_bounds(d, cap);
    CHECK(bounds.maxStep < 2.8);
    const double d0 = std::abs(d(GammaIndex{0, 0, 0}));
    for (int g1 = 0; g1 <= cap; ++g1) {
      for (int g2 = 0; g2 <= g1; ++g2) {
        for (int g3 = 0; g3 <= g1 - g2; ++g3) {
          const GammaIndex g{g1, g2, g3};
          CHECK(std::abs(d(g)) <= d0 + bounds.maxStep * g1 + 1e-12);
          CHECK(std::abs(d(g)) <= eigenvalue_bound(d(GammaIndex{0, 0, 0}), 2.8, g) + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("the bound is tight on the pure first-coordinate ray") {
  for (int k = 0; k <= 12; ++k) {
    const auto path = build_path(GammaIndex{k, 0, 0});
    CHECK(path.length == k);
  }
}
