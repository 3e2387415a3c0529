#pragma once

// Builders for the Jordan algebras of types A-D, their associative and Lie
// realizations, and a few small fixtures.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/lie_table.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

/// Associative matrix algebra underlying a special Jordan algebra.
/// `jordan_embedding` is assoc_dim x jordan_dim: column c holds the assoc
/// coordinates of Jordan basis element c. `involution` acts on assoc coordinates.
struct AssocContext {
  StructureTable assoc_table;
  std::optional<DenseMatrix> involution;
  DenseMatrix jordan_embedding;
};

inline std::string matrix_unit_name(char prefix, std::size_t p, std::size_t q) {
  return prefix + std::to_string(p + 1) + std::to_string(q + 1);
}

/// M_k on the matrix-unit basis E_pq (index p * k + q).
inline StructureTable matrix_unit_table(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) names.push_back(matrix_unit_name('E', p, q));
  StructureTable t(k * k, std::move(names));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t s = 0; s < k; ++s) t.set(p * k + q, q * k + s, p * k + s, 1);
  return t;
}

inline DenseMatrix transpose_involution(std::size_t k) {
  DenseMatrix p(k * k, k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) p(b * k + a, a * k + b) = 1;
  return p;
}

inline std::optional<std::array<std::size_t, 3>> first_associativity_violation(const StructureTable& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = product(t, basis_product(t, i, j), unit_vector(n, k));
        Vector right = product(t, unit_vector(n, i), basis_product(t, j, k));
        if (left != right) return std::array{i, j, k};
      }
  return std::nullopt;
}

/// P^2 = id and P(xy) = P(y) P(x) on all basis pairs.
inline bool check_involution(const StructureTable& t, const DenseMatrix& p) {
  const std::size_t n = t.dim();
  if (p.rows() != n || p.cols() != n) return false;
  if (!(p * p == DenseMatrix::identity(n))) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = p.apply(basis_product(t, i, j));
      Vector rhs = product(t, p.col(j), p.col(i));
      if (lhs != rhs) return false;
    }
  return true;
}

/// The embedding intertwines x o y with (xy + yx) / 2 on all basis pairs.
inline bool check_embedding(const StructureTable& jordan, const AssocContext& ctx) {
  const auto& e = ctx.jordan_embedding;
  const Scalar half(1, 2);
  for (std::size_t i = 0; i < jordan.dim(); ++i)
    for (std::size_t j = 0; j < jordan.dim(); ++j) {
      Vector x = e.col(i), y = e.col(j);
      Vector sym = half * (product(ctx.assoc_table, x, y) + product(ctx.assoc_table, y, x));
      if (e.apply(basis_product(jordan, i, j)) != sym) return false;
    }
  return true;
}

namespace detail {

// Jordan table of the subspace spanned by the embedding columns under
// (xy + yx) / 2; throws if the subspace is not closed.
inline StructureTable symmetrized_table(const StructureTable& assoc, const DenseMatrix& embedding,
                                        std::vector<std::string> names) {
  const std::size_t n = embedding.cols();
  StructureTable t(n, std::move(names));
  const Scalar half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector x = embedding.col(i), y = embedding.col(j);
      Vector sym = half * (product(assoc, x, y) + product(assoc, y, x));
      auto coords = solve(embedding, sym);
      if (!coords) throw std::logic_error("embedded subspace is not closed under the Jordan product");
      t.set_product(i, j, *coords);
      t.set_product(j, i, *coords);
    }
  return t;
}

}  // namespace detail

/// M_k under a o b = (ab + ba) / 2, on the matrix-unit basis.
inline std::pair<JordanAlgebra, AssocContext> full_matrix_jordan(std::size_t k) {
  if (k == 0) throw BadSpec("full_matrix_jordan needs k >= 1");
  AssocContext ctx{matrix_unit_table(k), std::nullopt, DenseMatrix::identity(k * k)};
  auto table = detail::symmetrized_table(ctx.assoc_table, ctx.jordan_embedding, ctx.assoc_table.basis_names());
  return {JordanAlgebra(std::move(table)), std::move(ctx)};
}

/// Symmetric k x k matrices under (ab + ba) / 2. Basis S_pq = E_pq + E_qp
/// (p < q) and S_pp = E_pp, ordered row by row over the upper triangle.
inline std::pair<JordanAlgebra, AssocContext> hermitian_jordan(std::size_t k) {
  if (k < 2) throw BadSpec("hermitian_jordan needs k >= 2");
  const std::size_t n = k * (k + 1) / 2;
  DenseMatrix embedding(k * k, n);
  std::vector<std::string> names;
  std::size_t col = 0;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p; q < k; ++q, ++col) {
      embedding(p * k + q, col) = 1;
      embedding(q * k + p, col) = 1;
      names.push_back(matrix_unit_name('S', p, q));
    }
  AssocContext ctx{matrix_unit_table(k), transpose_involution(k), std::move(embedding)};
  auto table = detail::symmetrized_table(ctx.assoc_table, ctx.jordan_embedding, std::move(names));
  return {JordanAlgebra(std::move(table)), std::move(ctx)};
}

/// Basis (1, u_1, ..., u_n) with u_i u_i = alpha_i 1 and u_i u_j = 0 for i != j.
inline JordanAlgebra spin_factor(const std::vector<Scalar>& alpha) {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (sgn(alpha[i]) == 0) throw ZeroParameter(i);
  const std::size_t n = alpha.size() + 1;
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i) names.push_back("u" + std::to_string(i));
  StructureTable t(n, std::move(names));
  for (std::size_t i = 0; i < n; ++i) {
    t.set(0, i, i, 1);
    t.set(i, 0, i, 1);
  }
  for (std::size_t i = 1; i < n; ++i) t.set(i, i, 0, alpha[i - 1]);
  return JordanAlgebra(std::move(t));
}

// Octonions ------------------------------------------------------------------

namespace detail {

inline Vector cd_conjugate(const Vector& x) {
  Vector out = x;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

// Cayley-Dickson doubling: (a, b)(c, d) = (ac - d*b, da + bc*).
inline Vector cd_multiply(const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  Vector a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(h)), b(x.begin() + static_cast<std::ptrdiff_t>(h), x.end());
  Vector c(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(h)), d(y.begin() + static_cast<std::ptrdiff_t>(h), y.end());
  Vector first = cd_multiply(a, c) - cd_multiply(cd_conjugate(d), b);
  Vector second = cd_multiply(d, a) + cd_multiply(b, cd_conjugate(c));
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

}  // namespace detail

/// Multiplication table of the rational octonions on e0 = 1, e1..e7, built by
/// three Cayley-Dickson doublings of Q.
inline StructureTable octonion_table() {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 8; ++i) names.push_back("e" + std::to_string(i));
  StructureTable t(8, std::move(names));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) t.set_product(i, j, detail::cd_multiply(unit_vector(8, i), unit_vector(8, j)));
  return t;
}

inline Vector octonion_conjugate(const Vector& x) { return detail::cd_conjugate(x); }

/// Sum of squares of the coordinates.
inline Scalar octonion_norm(const Vector& x) {
  Scalar s = 0;
  for (const auto& v : x) s += v * v;
  return s;
}

namespace detail {

using OctonionMatrix = std::array<std::array<Vector, 3>, 3>;

inline constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kAlbertPairs{{{0, 1}, {0, 2}, {1, 2}}};

inline OctonionMatrix albert_element(std::size_t index) {
  OctonionMatrix m;
  for (auto& row : m)
    for (auto& entry : row) entry = zero_vector(8);
  if (index < 3) {
    m[index][index][0] = 1;
    return m;
  }
  const auto [p, q] = kAlbertPairs[(index - 3) / 8];
  const std::size_t unit = (index - 3) % 8;
  m[p][q] = unit_vector(8, unit);
  m[q][p] = cd_conjugate(m[p][q]);
  return m;
}

inline OctonionMatrix octonion_matrix_product(const OctonionMatrix& x, const OctonionMatrix& y) {
  OctonionMatrix z;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      z[i][k] = zero_vector(8);
      for (std::size_t j = 0; j < 3; ++j) z[i][k] = z[i][k] + cd_multiply(x[i][j], y[j][k]);
    }
  return z;
}

inline Vector albert_coordinates(const OctonionMatrix& m) {
  Vector out = zero_vector(27);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t u = 1; u < 8; ++u)
      if (sgn(m[i][i][u]) != 0) throw std::logic_error("octonion matrix diagonal is not real");
    out[i] = m[i][i][0];
  }
  for (std::size_t pair = 0; pair < 3; ++pair) {
    const auto [p, q] = kAlbertPairs[pair];
    if (m[q][p] != cd_conjugate(m[p][q])) throw std::logic_error("octonion matrix is not hermitian");
    for (std::size_t u = 0; u < 8; ++u) out[3 + pair * 8 + u] = m[p][q][u];
  }
  return out;
}

}  // namespace detail

/// 3 x 3 octonion-hermitian matrices under (xy + yx) / 2. Basis: the three
/// diagonal idempotents E11, E22, E33, then for each (p, q) in (1,2), (1,3),
/// (2,3) the eight elements with e_u at (p, q) and its conjugate at (q, p).
inline JordanAlgebra albert_algebra() {
  std::vector<std::string> names{"E11", "E22", "E33"};
  for (const auto& [p, q] : detail::kAlbertPairs)
    for (std::size_t u = 0; u < 8; ++u)
      names.push_back("X" + std::to_string(p + 1) + std::to_string(q + 1) + ".e" + std::to_string(u));
  StructureTable t(27, std::move(names));
  std::vector<detail::OctonionMatrix> basis;
  for (std::size_t i = 0; i < 27; ++i) basis.push_back(detail::albert_element(i));
  for (std::size_t i = 0; i < 27; ++i)
    for (std::size_t j = i; j < 27; ++j) {
      auto xy = detail::octonion_matrix_product(basis[i], basis[j]);
      auto yx = detail::octonion_matrix_product(basis[j], basis[i]);
      detail::OctonionMatrix sym;
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) sym[r][c] = Scalar(1, 2) * (xy[r][c] + yx[r][c]);
      Vector coords = detail::albert_coordinates(sym);
      t.set_product(i, j, coords);
      t.set_product(j, i, coords);
    }
  return JordanAlgebra(std::move(t));
}

/// Two-dimensional nilpotent algebra: e1 e1 = e2 e2 = e1 + e2, e1 e2 = -e1 - e2.
inline JordanAlgebra nilpotent_fixture() {
  StructureTable t(2, {"e1", "e2"});
  for (std::size_t k = 0; k < 2; ++k) {
    t.set(0, 0, k, 1);
    t.set(1, 1, k, 1);
    t.set(0, 1, k, -1);
    t.set(1, 0, k, -1);
  }
  return JordanAlgebra(std::move(t));
}

/// Centerless, non-unital: e e = e, e v = v / 2, v v = 0.
inline JordanAlgebra halfspin_fixture() {
  StructureTable t(2, {"e", "v"});
  t.set(0, 0, 0, 1);
  t.set(0, 1, 1, Scalar(1, 2));
  t.set(1, 0, 1, Scalar(1, 2));
  return JordanAlgebra(std::move(t));
}

// Lie algebras -----------------------------------------------------------------

namespace detail {

// Lie table of a commutator-closed family of k x k matrices.
inline StructureTable commutator_table(const std::vector<DenseMatrix>& basis, std::vector<std::string> names) {
  const std::size_t n = basis.size();
  StructureTable t(n, std::move(names));
  if (n == 0) return t;
  const std::size_t entries = basis.front().rows() * basis.front().cols();
  DenseMatrix columns(entries, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < entries; ++r) columns(r, c) = basis[c].flatten()[r];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto coords = solve(columns, commutator(basis[i], basis[j]).flatten());
      if (!coords) throw std::logic_error("matrix family is not closed under the commutator");
      t.set_product(i, j, *coords);
      t.set_product(j, i, Scalar(-1) * *coords);
    }
  return t;
}

inline DenseMatrix matrix_unit(std::size_t k, std::size_t p, std::size_t q) {
  DenseMatrix m(k, k);
  m(p, q) = 1;
  return m;
}

}  // namespace detail

/// Basis matrices E_ij - (alpha_j / alpha_i) E_ji, i < j, in lexicographic order.
inline std::vector<DenseMatrix> so_alpha_matrices(std::size_t n, const std::vector<Scalar>& alpha) {
  if (alpha.size() != n) throw DimensionMismatch(n, alpha.size());
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(alpha[i]) == 0) throw ZeroParameter(i);
  std::vector<DenseMatrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      DenseMatrix m = detail::matrix_unit(n, i, j);
      m(j, i) = -alpha[j] / alpha[i];
      basis.push_back(std::move(m));
    }
  return basis;
}

/// Lie algebra of n x n matrices v with alpha_i v_ji + alpha_j v_ij = 0.
inline LieTable so_alpha(std::size_t n, const std::vector<Scalar>& alpha) {
  if (n < 2) throw BadSpec("so_alpha needs n >= 2");
  auto basis = so_alpha_matrices(n, alpha);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) names.push_back(matrix_unit_name('b', i, j));
  return LieTable(detail::commutator_table(basis, std::move(names)));
}

/// gl_k under the commutator.
inline LieTable assoc_lie(std::size_t k) {
  if (k == 0) throw BadSpec("assoc_lie needs k >= 1");
  std::vector<DenseMatrix> basis;
  std::vector<std::string> names;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      basis.push_back(detail::matrix_unit(k, p, q));
      names.push_back(matrix_unit_name('E', p, q));
    }
  return LieTable(detail::commutator_table(basis, std::move(names)));
}

/// Skew-symmetric k x k matrices, basis K_pq = E_pq - E_qp (p < q).
inline std::vector<DenseMatrix> skew_matrices(std::size_t k) {
  std::vector<DenseMatrix> basis;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q) basis.push_back(detail::matrix_unit(k, p, q) - detail::matrix_unit(k, q, p));
  return basis;
}

inline LieTable skew_lie(std::size_t k) {
  if (k < 2) throw BadSpec("skew_lie needs k >= 2");
  std::vector<std::string> names;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q) names.push_back(matrix_unit_name('K', p, q));
  return LieTable(detail::commutator_table(skew_matrices(k), std::move(names)));
}

}  // namespace jordan
