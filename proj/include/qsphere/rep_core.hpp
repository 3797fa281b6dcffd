// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qsphere/bigint.hpp"
#include "qsphere/gamma.hpp"

namespace qsphere::rep {

/// Dominant integral weight of the rank-n symplectic Lie algebra:
/// n integers with entries[0] >= entries[1] >= ... >= entries[n-1] >= 0.
class HighestWeight {
 public:
  explicit HighestWeight(std::vector<int> entries);

  static HighestWeight zero(int rank);

  int rank() const { return static_cast<int>(entries_.size()); }
  int at(int i) const { return entries_.at(static_cast<size_t>(i)); }  // 0-based
  const std::vector<int>& entries() const { return entries_; }
  bool is_zero() const;

  std::string str() const;

  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::vector<int> entries_;
};

/// Exact dimension of the irreducible sp(2n) representation with highest
/// weight lambda, by the type-C product formula over positive roots.
BigInt weyl_dimension(int n, const HighestWeight& lambda);

/// Multiplicity of the lambda-isotypic block in the coordinate algebra of
/// the quaternion sphere: lambda1 - lambda2 + 1 when at most the first two
/// entries are nonzero, 0 otherwise.
long trivial_isotypic_multiplicity(const HighestWeight& lambda);

/// Multiplicity of the rank-(n-1) irrep mu in the restriction of the rank-n
/// irrep lambda, counted by brute-force enumeration of the integer sequences
/// nu that interlace lambda from above and mu from below.
long branching_multiplicity(const HighestWeight& lambda, const HighestWeight& mu);

/// Decomposition of lambda tensor the 2n-dimensional defining representation:
/// exactly the dominant weights among lambda +- e_i, each with multiplicity
/// one.  Returned in decreasing lexicographic order.
std::vector<HighestWeight> tensor_with_defining(int n, const HighestWeight& lambda);

/// All gamma with g1 == k, in lexicographic order.  Count is (k+1)(k+2)/2.
std::vector<GammaIndex> gamma_level(int k);

/// All dominant rank-n weights with first entry <= cap, in lexicographic order.
std::vector<HighestWeight> dominant_weights_up_to(int n, int cap);

namespace detail {
// Numerator/denominator factorisation of the Weyl product; the denominator
// depends on the rank only, which callers evaluating many dimensions of the
// same rank exploit.
BigInt weyl_product_numerator(int n, const std::vector<int>& lambda);
BigInt weyl_product_denominator(int n);
}  // namespace detail

}  // namespace qsphere::rep
