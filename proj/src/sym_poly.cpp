// SPDX-License-Identifier: Apache-2.0
#include "qsphere/sym_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsphere::hwv {

Monomial Monomial::variable(Var v) {
  Monomial m;
  m.factors_.emplace_back(v, 1);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::divide_once(Var v) const {
  Monomial out;
  bool found = false;
  for (const auto& [var, e] : factors_) {
    if (var == v) {
      found = true;
      if (e > 1) out.factors_.emplace_back(var, e - 1);
    } else {
      out.factors_.emplace_back(var, e);
    }
  }
  if (!found) throw std::domain_error("variable does not divide monomial " + str());
  return out;
}

bool Monomial::operator<(const Monomial& other) const {
  const int da = degree(), db = other.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(
      factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
      [](const auto& p, const auto& q) {
        if (p.first != q.first) return p.first < q.first;
        return p.second > q.second;  // higher power of the earlier variable first
      });
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += "u[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

SymPolynomial SymPolynomial::constant(const BigRat& c) {
  SymPolynomial p;
  p.add_term(Monomial{}, c);
  return p;
}

SymPolynomial SymPolynomial::variable(Var v) {
  SymPolynomial p;
  p.add_term(Monomial::variable(v), 1);
  return p;
}

void SymPolynomial::add_term(const Monomial& m, const BigRat& c) {
  // mpq_class built from a (num, den) pair is not canonical until told so;
  // exact map equality relies on canonical coefficients throughout.
  BigRat v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
  SymPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma.times(mb), ca * cb);
    }
  }
  return out;
}

SymPolynomial SymPolynomial::scaled(const BigRat& c) const {
  BigRat v = c;
  v.canonicalize();
  SymPolynomial out;
  if (v == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * v);
  return out;
}

SymPolynomial SymPolynomial::pow(int e) const {
  if (e < 0) throw std::domain_error("negative polynomial power");
  SymPolynomial out = constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string SymPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*" + m.str();
  }
  return s;
}

}  // namespace qsphere::hwv
