#pragma once

// Derivation, triple-derivation and inner-derivation spaces as nullspaces of
// exact linear systems. An operator D is unknown in its n^2 matrix entries,
// flattened row-major: D[r][c] is the e_r coordinate of D(e_c).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/constructors.hpp"
#include "jordan/operators.hpp"

namespace jordan {

namespace detail {

inline Index op_index(std::size_t n, std::size_t r, std::size_t c) { return static_cast<Index>(r * n + c); }

/// D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0 for i <= j (or i < j).
inline SparseSystem derivation_system(const StructureTable& t, bool include_diagonal) {
  const std::size_t n = t.dim();
  SparseSystem system(n * n);
  std::vector<RationalRow> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = include_diagonal ? i : i + 1; j < n; ++j) {
      for (auto& row : rows) row.clear();
      for (const auto& [m, c] : t.product(i, j))
        for (std::size_t k = 0; k < n; ++k) rows[k].emplace_back(op_index(n, k, m), c);
      for (std::size_t m = 0; m < n; ++m) {
        for (const auto& [k, c] : t.product(m, j)) rows[k].emplace_back(op_index(n, m, i), -c);
        for (const auto& [k, c] : t.product(i, m)) rows[k].emplace_back(op_index(n, m, j), -c);
      }
      for (auto& row : rows) system.add_row(std::move(row));
    }
  return system;
}

/// D((e_i e_j) e_k) - (D(e_i) e_j) e_k - (e_i D(e_j)) e_k - (e_i e_j) D(e_k) = 0
/// for i <= j (or i < j) and every k.
inline SparseSystem triple_derivation_system(const StructureTable& t, bool include_diagonal) {
  const std::size_t n = t.dim();
  // (e_a e_b) e_c, indexed (a * n + b) * n + c
  std::vector<Terms> triple(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) triple[(a * n + b) * n + c] = sparse_product(t, t.product(a, b), basis_terms(c));
  SparseSystem system(n * n);
  std::vector<RationalRow> rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = include_diagonal ? i : i + 1; j < n; ++j) {
      const Terms& ij = t.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        for (auto& row : rows) row.clear();
        for (const auto& [m, c] : triple[(i * n + j) * n + k])
          for (std::size_t r = 0; r < n; ++r) rows[r].emplace_back(op_index(n, r, m), c);
        for (std::size_t m = 0; m < n; ++m) {
          for (const auto& [r, c] : triple[(m * n + j) * n + k]) rows[r].emplace_back(op_index(n, m, i), -c);
          for (const auto& [r, c] : triple[(i * n + m) * n + k]) rows[r].emplace_back(op_index(n, m, j), -c);
          for (const auto& [r, c] : sparse_product(t, ij, basis_terms(m))) rows[r].emplace_back(op_index(n, m, k), -c);
        }
        for (auto& row : rows) system.add_row(std::move(row));
      }
    }
  return system;
}

}  // namespace detail

/// Direct check of D(e_i e_j) = D(e_i) e_j + e_i D(e_j) on all basis pairs.
inline bool is_derivation(const StructureTable& t, const LinearOperator& d) {
  const std::size_t n = t.dim();
  if (d.dim() != n) throw DimensionMismatch(n, d.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = d.apply(basis_product(t, i, j));
      Vector rhs = product(t, d.matrix.col(i), unit_vector(n, j)) + product(t, unit_vector(n, i), d.matrix.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

inline OperatorSubspace der(const JordanAlgebra& j, const SolveOptions& options = {}) {
  const std::size_t n = j.dim();
  return {n, nullspace(detail::derivation_system(j.table(), true), resolve_for_dim(n, options))};
}

inline OperatorSubspace tder(const JordanAlgebra& j, const SolveOptions& options = {}) {
  const std::size_t n = j.dim();
  return {n, nullspace(detail::triple_derivation_system(j.table(), true), resolve_for_dim(n, options))};
}

/// span{[L_{e_i}, L_{e_j}] : i < j}
inline OperatorSubspace inn(const JordanAlgebra& j) {
  const std::size_t n = j.dim();
  std::vector<LinearOperator> mult;
  for (std::size_t i = 0; i < n; ++i) mult.push_back(left_mult(j, unit_vector(n, i)));
  std::vector<LinearOperator> brackets;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) brackets.push_back(operator_commutator(mult[a], mult[b]));
  return operator_span(n, brackets);
}

/// Elements of the associative algebra fixed by -P (all of it without an involution).
inline RowBasis admissible_elements(const AssocContext& ctx) {
  const std::size_t n = ctx.assoc_table.dim();
  if (!ctx.involution) return full_space(n);
  return nullspace(*ctx.involution + DenseMatrix::identity(n));
}

/// The operator a -> ad - da on the Jordan algebra embedded in ctx.
inline LinearOperator d_assoc(const AssocContext& ctx, const Vector& d) {
  const std::size_t assoc_dim = ctx.assoc_table.dim();
  if (d.size() != assoc_dim) throw DimensionMismatch(assoc_dim, d.size());
  if (ctx.involution && ctx.involution->apply(d) != Scalar(-1) * d) throw NotSkew();
  const auto& e = ctx.jordan_embedding;
  const std::size_t n = e.cols();
  DenseMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector a = e.col(c);
    Vector image = product(ctx.assoc_table, a, d) - product(ctx.assoc_table, d, a);
    auto coords = solve(e, image);
    if (!coords) throw std::logic_error("commutator leaves the embedded Jordan algebra");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = (*coords)[r];
  }
  return {std::move(m)};
}

/// span{D_d} over a basis of the admissible elements d.
inline OperatorSubspace dd_span(const AssocContext& ctx) {
  std::vector<LinearOperator> ops;
  for (const auto& d : admissible_elements(ctx).vectors) ops.push_back(d_assoc(ctx, d));
  return operator_span(ctx.jordan_embedding.cols(), ops);
}

/// Exact square root of a nonnegative rational, if it is rational.
inline std::optional<Scalar> rational_sqrt(const Scalar& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

/// Generators of the 3-dimensional ideal of so_alpha(4, alpha), as coordinate
/// vectors in the so_alpha basis (b12, b13, b14, b23, b24, b34):
///   -s b12 + b34,  s b13 + b24,  -t b14 + b23
/// with s = sqrt(a4 a1 / (a2 a3)) and t = sqrt(a3 a1 / (a2 a4)).
/// s t = +-a1/a2 and only the + sign gives an ideal, so s is the nonnegative
/// root and t = a1 / (a2 s). For positive alpha both are nonnegative roots.
inline std::vector<Vector> so4_ideal_generators(const std::vector<Scalar>& alpha) {
  if (alpha.size() != 4) throw DimensionMismatch(4, alpha.size());
  for (std::size_t i = 0; i < 4; ++i)
    if (sgn(alpha[i]) == 0) throw ZeroParameter(i);
  const Scalar s_sq = alpha[3] * alpha[0] / (alpha[1] * alpha[2]);
  auto s = rational_sqrt(s_sq);
  if (!s) throw IrrationalSurd(to_string(s_sq));
  const Scalar t = alpha[0] / (alpha[1] * *s);
  enum { b12, b13, b14, b23, b24, b34 };
  std::vector<Vector> gens(3, zero_vector(6));
  gens[0][b12] = -*s;
  gens[0][b34] = 1;
  gens[1][b13] = *s;
  gens[1][b24] = 1;
  gens[2][b14] = -t;
  gens[2][b23] = 1;
  return gens;
}

/// so_alpha coordinates -> the corresponding n x n matrix.
inline DenseMatrix so_alpha_element(std::size_t n, const std::vector<Scalar>& alpha, const Vector& coords) {
  auto basis = so_alpha_matrices(n, alpha);
  if (coords.size() != basis.size()) throw DimensionMismatch(basis.size(), coords.size());
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (sgn(coords[i]) != 0) m = m + coords[i] * basis[i];
  return m;
}

}  // namespace jordan
