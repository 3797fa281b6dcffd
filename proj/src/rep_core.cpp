// SPDX-License-Identifier: Apache-2.0
#include "qsphere/rep_core.hpp"

#include <algorithm>

namespace qsphere::rep {

HighestWeight::HighestWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::domain_error("highest weight needs at least one entry");
  }
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) {
      throw std::domain_error("highest weight entries must be nonnegative: " + str());
    }
    if (i + 1 < entries_.size() && entries_[i] < entries_[i + 1]) {
      throw std::domain_error("highest weight entries must be nonincreasing: " + str());
    }
  }
}

HighestWeight HighestWeight::zero(int rank) {
  if (rank < 1) throw std::domain_error("rank must be positive");
  return HighestWeight(std::vector<int>(static_cast<size_t>(rank), 0));
}

bool HighestWeight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

std::string HighestWeight::str() const {
  std::string s = "(";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

namespace detail {

// l_i = lambda_i + n - i + 1 (1-based); the product runs over the positive
// roots e_i - e_j, e_i + e_j (i < j) and 2 e_i, collapsing the pair
// (e_i - e_j, e_i + e_j) into the single factor l_i^2 - l_j^2.
BigInt weyl_product_numerator(int n, const std::vector<int>& lambda) {
  std::vector<long> l(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    l[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (n - i);
  }
  BigInt num = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const long a = l[static_cast<size_t>(i)];
      const long b = l[static_cast<size_t>(j)];
      num *= a * a - b * b;
    }
    num *= l[static_cast<size_t>(i)];
  }
  return num;
}

BigInt weyl_product_denominator(int n) {
  return weyl_product_numerator(n, std::vector<int>(static_cast<size_t>(n), 0));
}

}  // namespace detail

BigInt weyl_dimension(int n, const HighestWeight& lambda) {
  if (n < 1) throw std::domain_error("rank must be positive");
  if (lambda.rank() != n) {
    throw std::domain_error("weight " + lambda.str() + " does not have rank " +
                            std::to_string(n));
  }
  const BigInt num = detail::weyl_product_numerator(n, lambda.entries());
  const BigInt den = detail::weyl_product_denominator(n);
  BigInt dim;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("Weyl product not divisible for " + lambda.str());
  }
  mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return dim;
}

long trivial_isotypic_multiplicity(const HighestWeight& lambda) {
  if (lambda.rank() < 2) {
    throw std::domain_error("isotypic multiplicity needs rank >= 2");
  }
  for (int i = 2; i < lambda.rank(); ++i) {
    if (lambda.at(i) != 0) return 0;
  }
  return lambda.at(0) - lambda.at(1) + 1;
}

namespace {

// Double interlacing count: integer sequences nu of length n with
//   lambda_i >= nu_i >= lambda_{i+1}  (lambda_{n+1} := 0)
//   nu_i >= mu_i >= nu_{i+1}          (mu has n-1 parts)
// Enumerated componentwise over [0, lambda_1]; the conditions decouple but
// the scan stays a literal transcription of the rule.
long count_interlacing(const std::vector<int>& lambda, const std::vector<int>& mu) {
  const int n = static_cast<int>(lambda.size());
  long count = 1;
  for (int i = 0; i < n; ++i) {
    long options = 0;
    for (int nu = 0; nu <= lambda[0]; ++nu) {
      if (nu > lambda[static_cast<size_t>(i)]) continue;
      if (i + 1 < n && nu < lambda[static_cast<size_t>(i + 1)]) continue;
      if (i < n - 1 && nu < mu[static_cast<size_t>(i)]) continue;
      if (i >= 1 && nu > mu[static_cast<size_t>(i - 1)]) continue;
      ++options;
    }
    count *= options;
    if (count == 0) break;
  }
  return count;
}

}  // namespace

long branching_multiplicity(const HighestWeight& lambda, const HighestWeight& mu) {
  const int n = lambda.rank();
  if (n < 2) throw std::domain_error("branching needs rank >= 2");
  if (mu.rank() != n - 1) {
    throw std::domain_error("restriction target must have rank " + std::to_string(n - 1) +
                            ", got " + mu.str());
  }
  return count_interlacing(lambda.entries(), mu.entries());
}

std::vector<HighestWeight> tensor_with_defining(int n, const HighestWeight& lambda) {
  if (lambda.rank() != n) {
    throw std::domain_error("weight " + lambda.str() + " does not have rank " +
                            std::to_string(n));
  }
  std::vector<HighestWeight> out;
  for (int i = 0; i < n; ++i) {
    for (int delta : {+1, -1}) {
      std::vector<int> e = lambda.entries();
      e[static_cast<size_t>(i)] += delta;
      bool dominant = e[static_cast<size_t>(n - 1)] >= 0;
      for (int k = 0; dominant && k + 1 < n; ++k) {
        dominant = e[static_cast<size_t>(k)] >= e[static_cast<size_t>(k + 1)];
      }
      if (dominant) out.emplace_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(), [](const HighestWeight& a, const HighestWeight& b) {
    return b < a;
  });
  return out;
}

std::vector<GammaIndex> gamma_level(int k) {
  if (k < 0) throw std::domain_error("level must be nonnegative");
  std::vector<GammaIndex> out;
  const size_t count = (static_cast<size_t>(k) + 1) * (static_cast<size_t>(k) + 2) / 2;
  out.reserve(count);
  for (int g2 = 0; g2 <= k; ++g2) {
    for (int g3 = 0; g3 <= k - g2; ++g3) {
      out.push_back(GammaIndex{k, g2, g3});
    }
  }
  return out;
}

namespace {

void enumerate_dominant(int n, int cap, std::vector<int>& prefix,
                        std::vector<HighestWeight>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.emplace_back(prefix);
    return;
  }
  const int hi = prefix.empty() ? cap : prefix.back();
  for (int v = 0; v <= hi; ++v) {
    prefix.push_back(v);
    enumerate_dominant(n, cap, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HighestWeight> dominant_weights_up_to(int n, int cap) {
  if (n < 1) throw std::domain_error("rank must be positive");
  if (cap < 0) throw std::domain_error("cap must be nonnegative");
  std::vector<HighestWeight> out;
  std::vector<int> prefix;
  enumerate_dominant(n, cap, prefix, out);
  return out;
}

}  // namespace qsphere::rep
