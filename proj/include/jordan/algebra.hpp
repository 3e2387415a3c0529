#pragma once

// Structure-constant engine for finite-dimensional algebras. A StructureTable
// stores e_i * e_j = sum_k c[i][j][k] e_k sparsely per basis pair; the Jordan
// layer adds commutativity and Jordan-identity validation, the unit, the
// center, ideals and direct sums.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/errors.hpp"
#include "jordan/linalg.hpp"
#include "jordan/scalar.hpp"

namespace jordan {

using Terms = std::vector<std::pair<std::size_t, Scalar>>;

class StructureTable {
 public:
  StructureTable() = default;

  explicit StructureTable(std::size_t dim, std::vector<std::string> basis_names = {})
      : dim_(dim), products_(dim * dim), names_(std::move(basis_names)) {
    if (names_.empty())
      for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
    if (names_.size() != dim) throw DimensionMismatch(dim, names_.size());
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// Nonzero components of e_i * e_j, sorted by index.
  const Terms& product(std::size_t i, std::size_t j) const { return products_.at(i * dim_ + j); }

  Scalar at(std::size_t i, std::size_t j, std::size_t k) const {
    const Terms& t = product(i, j);
    auto it = std::lower_bound(t.begin(), t.end(), k, [](const auto& e, std::size_t c) { return e.first < c; });
    return it != t.end() && it->first == k ? it->second : Scalar(0);
  }

  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
    if (k >= dim_) throw DimensionMismatch(dim_, k);
    Terms& t = products_.at(i * dim_ + j);
    auto it = std::lower_bound(t.begin(), t.end(), k, [](const auto& e, std::size_t c) { return e.first < c; });
    if (it != t.end() && it->first == k) {
      if (sgn(value) == 0)
        t.erase(it);
      else
        it->second = value;
    } else if (sgn(value) != 0) {
      t.insert(it, {k, value});
    }
  }

  void set_product(std::size_t i, std::size_t j, const Vector& value) {
    if (value.size() != dim_) throw DimensionMismatch(dim_, value.size());
    Terms t;
    for (std::size_t k = 0; k < dim_; ++k)
      if (sgn(value[k]) != 0) t.emplace_back(k, value[k]);
    products_.at(i * dim_ + j) = std::move(t);
  }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Terms> products_;
  std::vector<std::string> names_;
};

/// Bilinear extension of the table.
inline Vector product(const StructureTable& t, const Vector& x, const Vector& y) {
  const std::size_t n = t.dim();
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  if (y.size() != n) throw DimensionMismatch(n, y.size());
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      Scalar s = x[i] * y[j];
      for (const auto& [k, c] : t.product(i, j)) out[k] += s * c;
    }
  }
  return out;
}

inline Vector basis_product(const StructureTable& t, std::size_t i, std::size_t j) {
  Vector out = zero_vector(t.dim());
  for (const auto& [k, c] : t.product(i, j)) out[k] = c;
  return out;
}

namespace detail {

// Sparse helpers for the identity checks, where dense vectors are too slow.
inline Terms sparse_product(const StructureTable& t, const Terms& x, const Terms& y) {
  std::vector<Scalar> acc(t.dim(), Scalar(0));
  std::vector<char> hit(t.dim(), 0);
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : t.product(i, j)) {
        acc[k] += a * b * c;
        hit[k] = 1;
      }
  Terms out;
  for (std::size_t k = 0; k < t.dim(); ++k)
    if (hit[k] && sgn(acc[k]) != 0) out.emplace_back(k, acc[k]);
  return out;
}

inline Terms basis_terms(std::size_t i) { return Terms{{i, Scalar(1)}}; }

inline void add_terms(std::vector<Scalar>& acc, const Terms& t, const Scalar& scale) {
  for (const auto& [k, c] : t) acc[k] += scale * c;
}

}  // namespace detail

inline std::optional<std::pair<std::size_t, std::size_t>> first_noncommuting_pair(const StructureTable& t) {
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j)
      if (t.product(i, j) != t.product(j, i)) return std::pair{i, j};
  return std::nullopt;
}

inline bool check_commutative(const StructureTable& t) { return !first_noncommuting_pair(t); }

/// First basis tuple (a, b, c, l), a <= b <= c, at which the fully linearized
/// Jordan identity fails:
///   sum over splittings {p,q | r} of {a,b,c} of
///   ((e_p e_q) e_l) e_r - (e_p e_q)(e_r e_l) = 0.
inline std::optional<std::array<std::size_t, 4>> first_jordan_violation(const StructureTable& t) {
  if (auto pair = first_noncommuting_pair(t)) throw NotCommutative(pair->first, pair->second);
  const std::size_t n = t.dim();
  using detail::basis_terms;
  using detail::sparse_product;
  // (e_p e_q) e_l and (e_p e_q)(e_r e_l) recur across tuples; cache by index.
  std::vector<std::optional<Terms>> pq_l(n * n * n);
  auto square_times = [&](std::size_t p, std::size_t q, std::size_t l) -> const Terms& {
    auto& slot = pq_l[(p * n + q) * n + l];
    if (!slot) slot = sparse_product(t, t.product(p, q), basis_terms(l));
    return *slot;
  };
  std::vector<Scalar> acc(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        const std::array<std::array<std::size_t, 3>, 3> splits{{{a, b, c}, {a, c, b}, {b, c, a}}};
        for (std::size_t l = 0; l < n; ++l) {
          std::fill(acc.begin(), acc.end(), Scalar(0));
          for (const auto& [p, q, r] : splits) {
            detail::add_terms(acc, sparse_product(t, square_times(p, q, l), basis_terms(r)), Scalar(1));
            detail::add_terms(acc, sparse_product(t, t.product(p, q), t.product(r, l)), Scalar(-1));
          }
          if (!is_zero(acc)) return std::array{a, b, c, l};
        }
      }
  return std::nullopt;
}

inline bool check_jordan_identity(const StructureTable& t) { return !first_jordan_violation(t); }

/// Matrix of x -> a * x acting on coordinate columns.
inline DenseMatrix left_mult_matrix(const StructureTable& t, const Vector& a) {
  const std::size_t n = t.dim();
  if (a.size() != n) throw DimensionMismatch(n, a.size());
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t col = 0; col < n; ++col)
      for (const auto& [k, c] : t.product(i, col)) m(k, col) += a[i] * c;
  }
  return m;
}

struct LinearOperator {
  DenseMatrix matrix;

  std::size_t dim() const { return matrix.rows(); }
  Vector apply(const Vector& x) const { return matrix.apply(x); }
  const Vector& flatten() const { return matrix.flatten(); }

  friend bool operator==(const LinearOperator&, const LinearOperator&) = default;
};

inline LinearOperator operator_commutator(const LinearOperator& a, const LinearOperator& b) {
  return {commutator(a.matrix, b.matrix)};
}

class JordanAlgebra {
 public:
  JordanAlgebra() = default;

  /// Validates commutativity and (unless skipped) the Jordan identity, then
  /// looks for a unit. Throws ValidationError naming the violating indices.
  explicit JordanAlgebra(StructureTable table, bool check_jordan = true) : table_(std::move(table)) {
    if (auto pair = first_noncommuting_pair(table_))
      throw ValidationError(ViolationKind::NotCommutative, {pair->first, pair->second});
    commutative_checked_ = true;
    if (check_jordan) {
      if (auto v = first_jordan_violation(table_))
        throw ValidationError(ViolationKind::NotJordan, {(*v)[0], (*v)[1], (*v)[2], (*v)[3]});
      jordan_checked_ = true;
    }
    unit_ = compute_unit();
  }

  const StructureTable& table() const { return table_; }
  std::size_t dim() const { return table_.dim(); }
  bool commutative_checked() const { return commutative_checked_; }
  bool jordan_checked() const { return jordan_checked_; }
  const std::optional<Vector>& unit() const { return unit_; }

 private:
  // e * e_i = e_i for all i, as a linear system in the coordinates of e.
  std::optional<Vector> compute_unit() const {
    const std::size_t n = dim();
    if (n == 0) return Vector{};
    DenseMatrix m(n * n, n);
    Vector rhs = zero_vector(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      rhs[i * n + i] = 1;
      for (std::size_t a = 0; a < n; ++a)
        for (const auto& [k, c] : table_.product(a, i)) m(i * n + k, a) = c;
    }
    return solve(m, rhs);
  }

  StructureTable table_;
  bool commutative_checked_ = false;
  bool jordan_checked_ = false;
  std::optional<Vector> unit_;
};

inline Vector multiply(const JordanAlgebra& j, const Vector& x, const Vector& y) { return product(j.table(), x, y); }

/// The unit is unique when it exists: the homogeneous part e * e_i = 0 has
/// only the trivial solution in a unital algebra.
inline std::optional<Vector> find_unit(const JordanAlgebra& j) { return j.unit(); }

inline LinearOperator left_mult(const JordanAlgebra& j, const Vector& a) { return {left_mult_matrix(j.table(), a)}; }

/// {a : (a e_i) e_j = (a e_j) e_i = (e_i e_j) a for all i <= j}.
inline RowBasis center(const JordanAlgebra& j, const SolveOptions& options = {}) {
  const auto& t = j.table();
  const std::size_t n = t.dim();
  using detail::basis_terms;
  using detail::sparse_product;
  std::vector<Terms> left(n * n);  // (e_m e_i) stored at m * n + i
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i) left[m * n + i] = t.product(m, i);
  SparseSystem system(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = i; jj < n; ++jj) {
      std::vector<detail::RationalRow> first(n), second(n);
      for (std::size_t m = 0; m < n; ++m) {
        const Terms mij = sparse_product(t, left[m * n + i], basis_terms(jj));
        const Terms mji = sparse_product(t, left[m * n + jj], basis_terms(i));
        const Terms ijm = sparse_product(t, t.product(i, jj), basis_terms(m));
        const auto col = static_cast<detail::Index>(m);
        for (const auto& [k, c] : mij) first[k].emplace_back(col, c);
        for (const auto& [k, c] : mji) {
          first[k].emplace_back(col, -c);
          second[k].emplace_back(col, c);
        }
        for (const auto& [k, c] : ijm) second[k].emplace_back(col, -c);
      }
      for (std::size_t k = 0; k < n; ++k) {
        system.add_row(std::move(first[k]));
        system.add_row(std::move(second[k]));
      }
    }
  return nullspace(system, resolve_for_dim(n, options));
}

/// Smallest subspace containing `seed` and closed under multiplication by
/// every basis element.
inline RowBasis ideal_closure(const StructureTable& t, const RowBasis& seed) {
  if (seed.ambient_dim != t.dim()) throw DimensionMismatch(t.dim(), seed.ambient_dim);
  RowBasis closure = span_of(t.dim(), seed.vectors);
  std::vector<Vector> pending = closure.vectors;
  while (!pending.empty()) {
    Vector v = std::move(pending.back());
    pending.pop_back();
    for (std::size_t i = 0; i < t.dim(); ++i) {
      Vector w = product(t, v, unit_vector(t.dim(), i));
      if (contains_vector(closure, w)) continue;
      std::vector<Vector> grown = closure.vectors;
      grown.push_back(w);
      closure = span_of(t.dim(), grown);
      pending.push_back(std::move(w));
    }
  }
  return closure;
}

inline RowBasis ideal_closure(const JordanAlgebra& j, const RowBasis& seed) { return ideal_closure(j.table(), seed); }

/// Block-diagonal table on dim1 + dim2 with vanishing cross products.
inline StructureTable direct_sum(const StructureTable& a, const StructureTable& b) {
  const std::size_t n1 = a.dim(), n2 = b.dim();
  std::vector<std::string> names;
  for (const auto& s : a.basis_names()) names.push_back("1." + s);
  for (const auto& s : b.basis_names()) names.push_back("2." + s);
  StructureTable out(n1 + n2, std::move(names));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (const auto& [k, c] : a.product(i, j)) out.set(i, j, k, c);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (const auto& [k, c] : b.product(i, j)) out.set(n1 + i, n1 + j, n1 + k, c);
  return out;
}

inline JordanAlgebra direct_sum(const JordanAlgebra& a, const JordanAlgebra& b) {
  if (auto pair = first_noncommuting_pair(a.table())) throw NotCommutative(pair->first, pair->second);
  if (auto pair = first_noncommuting_pair(b.table())) throw NotCommutative(pair->first, pair->second);
  return JordanAlgebra(direct_sum(a.table(), b.table()), a.jordan_checked() && b.jordan_checked());
}

/// Places a subspace of the first (or second) summand inside the direct sum.
inline RowBasis embed_summand(const RowBasis& s, std::size_t offset, std::size_t total_dim) {
  RowBasis out{total_dim, {}};
  for (const auto& v : s.vectors) {
    Vector w = zero_vector(total_dim);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(offset));
    out.vectors.push_back(std::move(w));
  }
  return out;
}

}  // namespace jordan
