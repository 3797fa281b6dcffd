// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsphere/bigint.hpp"

namespace qsphere::hwv {

/// Coordinate function u^row_col of the sphere algebra; only rows 1 and 2n
/// occur among the generators.
struct Var {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Var&, const Var&) = default;
};

/// Commutative monomial: sorted (variable, exponent) factors.  Ordered by
/// total degree first, then lexicographically, so polynomial iteration and
/// rank computations are deterministic.
class Monomial {
 public:
  Monomial() = default;  // empty product

  static Monomial variable(Var v);

  int degree() const;
  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

  Monomial times(const Monomial& other) const;
  /// Removes one power of v; v must divide the monomial.
  Monomial divide_once(Var v) const;

  bool operator==(const Monomial&) const = default;
  bool operator<(const Monomial& other) const;

  std::string str() const;

 private:
  std::vector<std::pair<Var, int>> factors_;
};

/// Exact-rational commutative polynomial in the coordinate variables.
class SymPolynomial {
 public:
  SymPolynomial() = default;

  static SymPolynomial constant(const BigRat& c);
  static SymPolynomial variable(Var v);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, BigRat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const BigRat& c);

  SymPolynomial& operator+=(const SymPolynomial& other);
  SymPolynomial& operator-=(const SymPolynomial& other);
  friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) {
    return a += b;
  }
  friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) {
    return a -= b;
  }
  friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
  SymPolynomial scaled(const BigRat& c) const;
  SymPolynomial pow(int e) const;

  bool operator==(const SymPolynomial&) const = default;

  std::string str() const;

 private:
  std::map<Monomial, BigRat> terms_;
};

}  // namespace qsphere::hwv
