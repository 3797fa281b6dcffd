// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace qsphere {

// Weyl dimension products and level multiplicities overflow 64-bit integers
// almost immediately, so all counting arithmetic is done in GMP.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// True when the value is exactly representable as an IEEE double integer.
inline bool fits_double_int(const BigInt& v) {
  return v == 0 || mpz_sizeinbase(v.get_mpz_t(), 2) <= 53;
}

}  // namespace qsphere
