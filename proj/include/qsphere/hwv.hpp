// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsphere/sym_poly.hpp"

namespace qsphere::hwv {

/// Thrown when no basis convention reproduces the required action table.
struct ConventionError : std::logic_error {
  using std::logic_error::logic_error;
};

using IntMatrix = std::vector<std::vector<int>>;

/// Chevalley generator of sp(2n) together with its matrix in the
/// 2n-dimensional defining representation.
struct GeneratorAction {
  enum class Kind { Raise, Lower, Cartan };  // E_i, F_i, H_i

  Kind kind = Kind::Cartan;
  int index = 1;  // 1..n
  int rank = 2;   // n
  IntMatrix t;    // 2n x 2n

  std::string label() const;
};

/// All E_i, F_i, H_i matrices for rank n.  The basis is ordered so that the
/// induced derivation action on the distinguished coordinates
///   x = u^1_{2n-1}, y = u^{2n}_{2n-1}, z = u^1_{2n}, w = u^{2n}_{2n}
/// reproduces the anchor table (E_1 x = -z, E_1 y = -w, H_1 x = -x, ...);
/// the construction re-verifies the anchors and the Chevalley relations and
/// throws ConventionError if either check fails.
std::vector<GeneratorAction> build_generator_matrices(int n);

const GeneratorAction& generator(const std::vector<GeneratorAction>& gens,
                                 GeneratorAction::Kind kind, int index);

/// Entry pairing alpha_j(H_i) of the type-C Cartan data.
int cartan_pairing(int n, int j, int i);

/// Leibniz extension of the generator's derivation action:
/// on a variable, g(u^k_l) = sum_m u^k_m t_{ml}(g).
SymPolynomial apply_generator(const GeneratorAction& g, const SymPolynomial& p);

/// Distinguished coordinates for rank n.
Var var_x(int n);
Var var_y(int n);
Var var_z(int n);
Var var_w(int n);

/// b^(l1,l2,j) = z^j w^(l1-l2-j) (xw - yz)^(l2), fully expanded.
SymPolynomial hwv_candidate(int n, int lambda1, int lambda2, int j);

struct HWVReport {
  int lambda1 = 0;
  int lambda2 = 0;
  int j = -1;  // -1 when not built from the candidate family
  std::vector<bool> raiseAnnihilated;         // E_1..E_n
  std::optional<BigRat> h1Eigenvalue;         // set only when p is an eigenvector
  std::optional<BigRat> h2Eigenvalue;
  std::vector<bool> higherCartanAnnihilated;  // H_i for i >= 3
  bool pass = false;
};

/// Exact rational checks: E_i p = 0 for i = 1..n, H_1 p = (l1-l2) p,
/// H_2 p = l2 p, H_i p = 0 for i >= 3.
HWVReport verify_highest_weight(const SymPolynomial& p, int lambda1, int lambda2, int n,
                                const std::vector<GeneratorAction>& gens);
HWVReport verify_highest_weight(const SymPolynomial& p, int lambda1, int lambda2, int n);

struct RankResult {
  bool independent = false;
  int rank = 0;
  friend bool operator==(const RankResult&, const RankResult&) = default;
};

/// Rank of the exact coefficient matrix via fraction-free elimination.
RankResult linear_independence(const std::vector<SymPolynomial>& polys);

}  // namespace qsphere::hwv
