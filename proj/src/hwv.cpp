// SPDX-License-Identifier: Apache-2.0
#include "qsphere/hwv.hpp"

#include <algorithm>
#include <set>

namespace qsphere::hwv {

std::string GeneratorAction::label() const {
  const char* k = kind == Kind::Raise ? "E" : kind == Kind::Lower ? "F" : "H";
  return k + std::to_string(index);
}

int cartan_pairing(int n, int j, int i) {
  if (j < 1 || j > n || i < 1 || i > n) throw std::domain_error("Cartan index out of range");
  // alpha_j in e-coordinates: e_j - e_{j+1} for j < n, 2 e_n for j == n.
  std::vector<int> a(static_cast<size_t>(n), 0);
  if (j < n) {
    a[static_cast<size_t>(j - 1)] = 1;
    a[static_cast<size_t>(j)] = -1;
  } else {
    a[static_cast<size_t>(n - 1)] = 2;
  }
  // Pairing with the coroot of alpha_i.
  return i < n ? a[static_cast<size_t>(i - 1)] - a[static_cast<size_t>(i)]
               : a[static_cast<size_t>(n - 1)];
}

namespace {

IntMatrix zero_matrix(int dim) {
  return IntMatrix(static_cast<size_t>(dim), std::vector<int>(static_cast<size_t>(dim), 0));
}

// Basis convention: column j <= n carries weight -e_j and column 2n+1-j
// carries weight +e_j, which places the weight-(e_1) and weight-(e_2)
// vectors at the two rightmost columns used by z, w and x, y.
IntMatrix raise_matrix(int n, int i) {
  const int dim = 2 * n;
  IntMatrix t = zero_matrix(dim);
  if (i < n) {
    t[static_cast<size_t>(2 * n - i)][static_cast<size_t>(2 * n - i - 1)] = -1;  // e_{i+1} -> e_i
    t[static_cast<size_t>(i)][static_cast<size_t>(i - 1)] = 1;                   // -e_i -> -e_{i+1}
  } else {
    t[static_cast<size_t>(n)][static_cast<size_t>(n - 1)] = 1;  // -e_n -> e_n
  }
  return t;
}

IntMatrix lower_matrix(int n, int i) {
  const int dim = 2 * n;
  IntMatrix t = zero_matrix(dim);
  if (i < n) {
    t[static_cast<size_t>(2 * n - i - 1)][static_cast<size_t>(2 * n - i)] = -1;  // e_i -> e_{i+1}
    t[static_cast<size_t>(i - 1)][static_cast<size_t>(i)] = 1;                    // -e_{i+1} -> -e_i
  } else {
    t[static_cast<size_t>(n - 1)][static_cast<size_t>(n)] = 1;  // e_n -> -e_n
  }
  return t;
}

IntMatrix cartan_matrix_rep(int n, int i) {
  const int dim = 2 * n;
  IntMatrix t = zero_matrix(dim);
  for (int j = 1; j <= n; ++j) {
    // weight of column j is -e_j, of column 2n+1-j is +e_j
    std::vector<int> weight(static_cast<size_t>(n), 0);
    weight[static_cast<size_t>(j - 1)] = 1;
    const int pairing = i < n ? weight[static_cast<size_t>(i - 1)] -
                                    weight[static_cast<size_t>(i)]
                              : weight[static_cast<size_t>(n - 1)];
    t[static_cast<size_t>(j - 1)][static_cast<size_t>(j - 1)] = -pairing;
    t[static_cast<size_t>(2 * n - j)][static_cast<size_t>(2 * n - j)] = pairing;
  }
  return t;
}

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) {
  const size_t dim = a.size();
  IntMatrix out = zero_matrix(static_cast<int>(dim));
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      int v = 0;
      for (size_t k = 0; k < dim; ++k) {
        v += a[r][k] * b[k][c] - b[r][k] * a[k][c];
      }
      out[r][c] = v;
    }
  }
  return out;
}

IntMatrix scaled_matrix(const IntMatrix& a, int s) {
  IntMatrix out = a;
  for (auto& row : out) {
    for (auto& v : row) v *= s;
  }
  return out;
}

void check_chevalley(int n, const std::vector<GeneratorAction>& gens) {
  const auto& E = [&](int i) -> const IntMatrix& {
    return generator(gens, GeneratorAction::Kind::Raise, i).t;
  };
  const auto& F = [&](int i) -> const IntMatrix& {
    return generator(gens, GeneratorAction::Kind::Lower, i).t;
  };
  const auto& H = [&](int i) -> const IntMatrix& {
    return generator(gens, GeneratorAction::Kind::Cartan, i).t;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (commutator(H(i), H(j)) != zero_matrix(2 * n)) {
        throw ConventionError("Cartan matrices do not commute");
      }
      if (commutator(H(i), E(j)) != scaled_matrix(E(j), cartan_pairing(n, j, i))) {
        throw ConventionError("[H_" + std::to_string(i) + ", E_" + std::to_string(j) +
                              "] mismatch");
      }
      if (commutator(H(i), F(j)) != scaled_matrix(F(j), -cartan_pairing(n, j, i))) {
        throw ConventionError("[H_" + std::to_string(i) + ", F_" + std::to_string(j) +
                              "] mismatch");
      }
      const IntMatrix expected = i == j ? H(i) : zero_matrix(2 * n);
      if (commutator(E(i), F(j)) != expected) {
        throw ConventionError("[E_" + std::to_string(i) + ", F_" + std::to_string(j) +
                              "] mismatch");
      }
    }
  }
}

void check_anchor_table(int n, const std::vector<GeneratorAction>& gens) {
  const SymPolynomial x = SymPolynomial::variable(var_x(n));
  const SymPolynomial y = SymPolynomial::variable(var_y(n));
  const SymPolynomial z = SymPolynomial::variable(var_z(n));
  const SymPolynomial w = SymPolynomial::variable(var_w(n));
  const SymPolynomial zero;

  const auto expect = [](const SymPolynomial& got, const SymPolynomial& want,
                         const std::string& what) {
    if (!(got == want)) {
      throw ConventionError("anchor mismatch for " + what + ": got " + got.str());
    }
  };

  for (int i = 2; i <= n; ++i) {
    const auto& Ei = generator(gens, GeneratorAction::Kind::Raise, i);
    expect(apply_generator(Ei, x), zero, "E_i x, i > 1");
    expect(apply_generator(Ei, y), zero, "E_i y, i > 1");
    expect(apply_generator(Ei, z), zero, "E_i z, i > 1");
    expect(apply_generator(Ei, w), zero, "E_i w, i > 1");
  }
  const auto& E1 = generator(gens, GeneratorAction::Kind::Raise, 1);
  expect(apply_generator(E1, x), zero - z, "E_1 x = -z");
  expect(apply_generator(E1, y), zero - w, "E_1 y = -w");

  const auto& H1 = generator(gens, GeneratorAction::Kind::Cartan, 1);
  expect(apply_generator(H1, x), zero - x, "H_1 x = -x");
  expect(apply_generator(H1, y), zero - y, "H_1 y = -y");
  expect(apply_generator(H1, z), z, "H_1 z = z");
  expect(apply_generator(H1, w), w, "H_1 w = w");

  const auto& H2 = generator(gens, GeneratorAction::Kind::Cartan, 2);
  expect(apply_generator(H2, x), x, "H_2 x = x");
  expect(apply_generator(H2, y), y, "H_2 y = y");
  expect(apply_generator(H2, z), zero, "H_2 z = 0");
  expect(apply_generator(H2, w), zero, "H_2 w = 0");

  for (int i = 3; i <= n; ++i) {
    const auto& Hi = generator(gens, GeneratorAction::Kind::Cartan, i);
    expect(apply_generator(Hi, x), zero, "H_i x, i > 2");
    expect(apply_generator(Hi, y), zero, "H_i y, i > 2");
    expect(apply_generator(Hi, z), zero, "H_i z, i > 2");
    expect(apply_generator(Hi, w), zero, "H_i w, i > 2");
  }
}

}  // namespace

std::vector<GeneratorAction> build_generator_matrices(int n) {
  if (n < 2) throw std::domain_error("generator matrices need rank n >= 2");
  std::vector<GeneratorAction> gens;
  gens.reserve(3 * static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    gens.push_back({GeneratorAction::Kind::Raise, i, n, raise_matrix(n, i)});
    gens.push_back({GeneratorAction::Kind::Lower, i, n, lower_matrix(n, i)});
    gens.push_back({GeneratorAction::Kind::Cartan, i, n, cartan_matrix_rep(n, i)});
  }
  check_chevalley(n, gens);
  check_anchor_table(n, gens);
  return gens;
}

const GeneratorAction& generator(const std::vector<GeneratorAction>& gens,
                                 GeneratorAction::Kind kind, int index) {
  for (const auto& g : gens) {
    if (g.kind == kind && g.index == index) return g;
  }
  throw std::domain_error("no such generator");
}

SymPolynomial apply_generator(const GeneratorAction& g, const SymPolynomial& p) {
  const int twoN = 2 * g.rank;
  SymPolynomial out;
  for (const auto& [mono, coeff] : p.terms()) {
    for (const auto& [v, e] : mono.factors()) {
      if ((v.row != 1 && v.row != twoN) || v.col < 1 || v.col > twoN) {
        throw std::domain_error("variable u[" + std::to_string(v.row) + "," +
                                std::to_string(v.col) + "] does not live in rank " +
                                std::to_string(g.rank));
      }
      const Monomial rest = mono.divide_once(v);
      for (int m = 1; m <= twoN; ++m) {
        const int entry = g.t[static_cast<size_t>(m - 1)][static_cast<size_t>(v.col - 1)];
        if (entry == 0) continue;
        out.add_term(rest.times(Monomial::variable(Var{v.row, m})), coeff * e * entry);
      }
    }
  }
  return out;
}

Var var_x(int n) { return Var{1, 2 * n - 1}; }
Var var_y(int n) { return Var{2 * n, 2 * n - 1}; }
Var var_z(int n) { return Var{1, 2 * n}; }
Var var_w(int n) { return Var{2 * n, 2 * n}; }

SymPolynomial hwv_candidate(int n, int lambda1, int lambda2, int j) {
  if (n < 2) throw std::domain_error("candidate needs rank n >= 2");
  if (lambda2 < 0 || lambda1 < lambda2) {
    throw std::domain_error("need lambda1 >= lambda2 >= 0");
  }
  if (j < 0 || j > lambda1 - lambda2) {
    throw std::domain_error("index j must lie in 0..lambda1-lambda2");
  }
  const SymPolynomial x = SymPolynomial::variable(var_x(n));
  const SymPolynomial y = SymPolynomial::variable(var_y(n));
  const SymPolynomial z = SymPolynomial::variable(var_z(n));
  const SymPolynomial w = SymPolynomial::variable(var_w(n));
  return z.pow(j) * w.pow(lambda1 - lambda2 - j) * (x * w - y * z).pow(lambda2);
}

namespace {

// q == c * p for some rational c?  Returns the eigenvalue c.
std::optional<BigRat> eigen_ratio(const SymPolynomial& q, const SymPolynomial& p) {
  if (q.is_zero()) return BigRat(0);
  if (p.is_zero() || q.term_count() != p.term_count()) return std::nullopt;
  const auto& [mono, coeff] = *p.terms().begin();
  const auto it = q.terms().find(mono);
  if (it == q.terms().end()) return std::nullopt;
  const BigRat c = it->second / coeff;
  return q == p.scaled(c) ? std::optional<BigRat>(c) : std::nullopt;
}

}  // namespace

HWVReport verify_highest_weight(const SymPolynomial& p, int lambda1, int lambda2, int n,
                                const std::vector<GeneratorAction>& gens) {
  if (p.is_zero()) throw std::domain_error("cannot verify the zero polynomial");
  HWVReport report;
  report.lambda1 = lambda1;
  report.lambda2 = lambda2;

  bool pass = true;
  for (int i = 1; i <= n; ++i) {
    const bool killed =
        apply_generator(generator(gens, GeneratorAction::Kind::Raise, i), p).is_zero();
    report.raiseAnnihilated.push_back(killed);
    pass = pass && killed;
  }

  const auto checkCartan = [&](int i, const BigRat& want) {
    const auto q = apply_generator(generator(gens, GeneratorAction::Kind::Cartan, i), p);
    return eigen_ratio(q, p) == std::optional<BigRat>(want);
  };
  const auto h1 = eigen_ratio(
      apply_generator(generator(gens, GeneratorAction::Kind::Cartan, 1), p), p);
  const auto h2 = eigen_ratio(
      apply_generator(generator(gens, GeneratorAction::Kind::Cartan, 2), p), p);
  report.h1Eigenvalue = h1;
  report.h2Eigenvalue = h2;
  pass = pass && h1 == std::optional<BigRat>(BigRat(lambda1 - lambda2));
  pass = pass && h2 == std::optional<BigRat>(BigRat(lambda2));
  for (int i = 3; i <= n; ++i) {
    const bool killed = checkCartan(i, BigRat(0));
    report.higherCartanAnnihilated.push_back(killed);
    pass = pass && killed;
  }
  report.pass = pass;
  return report;
}

HWVReport verify_highest_weight(const SymPolynomial& p, int lambda1, int lambda2, int n) {
  return verify_highest_weight(p, lambda1, lambda2, n, build_generator_matrices(n));
}

RankResult linear_independence(const std::vector<SymPolynomial>& polys) {
  if (polys.empty()) throw std::domain_error("need at least one polynomial");

  std::set<Monomial> monomials;
  for (const auto& p : polys) {
    for (const auto& [m, c] : p.terms()) monomials.insert(m);
  }
  std::vector<Monomial> rows(monomials.begin(), monomials.end());

  // One column per polynomial, scaled integral (row scaling preserves rank).
  const size_t nr = rows.size(), nc = polys.size();
  std::vector<std::vector<BigInt>> mat(nr, std::vector<BigInt>(nc, 0));
  for (size_t c = 0; c < nc; ++c) {
    BigInt scale = 1;
    for (const auto& [m, coeff] : polys[c].terms()) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), coeff.get_den().get_mpz_t());
    }
    for (size_t r = 0; r < nr; ++r) {
      const auto it = polys[c].terms().find(rows[r]);
      if (it != polys[c].terms().end()) {
        mat[r][c] = it->second.get_num() * (scale / it->second.get_den());
      }
    }
  }

  // Bareiss fraction-free elimination; divisions by the previous pivot are exact.
  int rank = 0;
  BigInt prev = 1;
  size_t pivotRow = 0;
  for (size_t col = 0; col < nc && pivotRow < nr; ++col) {
    size_t sel = pivotRow;
    while (sel < nr && mat[sel][col] == 0) ++sel;
    if (sel == nr) continue;
    std::swap(mat[sel], mat[pivotRow]);
    for (size_t r = pivotRow + 1; r < nr; ++r) {
      for (size_t c = col + 1; c < nc; ++c) {
        BigInt v = mat[pivotRow][col] * mat[r][c] - mat[r][col] * mat[pivotRow][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        mat[r][c] = v;
      }
      mat[r][col] = 0;
    }
    prev = mat[pivotRow][col];
    ++pivotRow;
    ++rank;
  }
  return RankResult{rank == static_cast<int>(nc), rank};
}

}  // namespace qsphere::hwv
