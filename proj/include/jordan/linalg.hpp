#pragma once

// Exact rational linear algebra: matrices, canonical subspaces, reduced
// row-echelon forms and nullspaces. Every solution space downstream is a
// RowBasis in reduced row-echelon form, so subspace equality is entry identity.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jordan/detail/exact_echelon.hpp"
#include "jordan/detail/modular.hpp"
#include "jordan/errors.hpp"
#include "jordan/scalar.hpp"

namespace jordan {

enum class Strategy { dense, modular };

struct SolveOptions {
  std::optional<Strategy> strategy;  // unset: chosen from the problem size
  std::size_t prime_budget = 64;
};

/// Algebras of dimension 20 and up default to the modular strategy.
inline SolveOptions resolve_for_dim(std::size_t algebra_dim, SolveOptions options) {
  if (!options.strategy) options.strategy = algebra_dim >= 20 ? Strategy::modular : Strategy::dense;
  return options;
}

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    DenseMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw DimensionMismatch(m.cols_, rows[r].size());
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
    }
    return m;
  }

  /// Inverse of flatten() for square n x n matrices.
  static DenseMatrix unflatten(std::size_t n, const Vector& flat) {
    if (flat.size() != n * n) throw DimensionMismatch(n * n, flat.size());
    DenseMatrix m(n, n);
    m.data_ = flat;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  Vector col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  /// Row-major coordinates.
  const Vector& flatten() const { return data_; }

  bool is_zero() const { return jordan::is_zero(data_); }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vector apply(const Vector& x) const {
    if (x.size() != cols_) throw DimensionMismatch(cols_, x.size());
    Vector y = zero_vector(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch(a.cols_, b.rows_);
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend DenseMatrix operator*(const Scalar& s, DenseMatrix m) {
    for (auto& x : m.data_) x *= s;
    return m;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const DenseMatrix& b) const {
    if (rows_ != b.rows_) throw DimensionMismatch(rows_, b.rows_);
    if (cols_ != b.cols_) throw DimensionMismatch(cols_, b.cols_);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

inline DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

/// Row-sparse homogeneous linear system, the assembly form used by the
/// derivation and center solvers.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t cols) : cols_(cols) {}

  static SparseSystem from_dense(const DenseMatrix& m) {
    SparseSystem s(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      detail::RationalRow row;
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(r, c)) != 0) row.emplace_back(static_cast<detail::Index>(c), m(r, c));
      s.rows_.push_back(std::move(row));
    }
    return s;
  }

  /// Adds a row given as (column, coefficient) terms; duplicates are summed.
  void add_row(detail::RationalRow terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    detail::RationalRow row;
    for (auto& [c, v] : terms) {
      if (c >= cols_) throw DimensionMismatch(cols_, c);
      if (!row.empty() && row.back().first == c)
        row.back().second += v;
      else
        row.emplace_back(c, std::move(v));
    }
    std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
    if (!row.empty()) rows_.push_back(std::move(row));
  }

  std::size_t cols() const { return cols_; }
  const std::vector<detail::RationalRow>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<detail::RationalRow> rows_;
};

/// Canonical basis of a subspace of Q^n: reduced row-echelon rows.
struct RowBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vector> vectors;

  std::size_t dim() const { return vectors.size(); }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& v : vectors) {
      auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) != 0; });
      out.push_back(static_cast<std::size_t>(it - v.begin()));
    }
    return out;
  }

  friend bool operator==(const RowBasis&, const RowBasis&) = default;
};

namespace detail {

inline RowBasis to_basis(std::size_t n, const std::vector<RationalRow>& rows) {
  RowBasis b{n, {}};
  for (const auto& row : rows) {
    Vector v = zero_vector(n);
    for (const auto& [c, q] : row) v[c] = q;
    b.vectors.push_back(std::move(v));
  }
  return b;
}

inline RationalRow sparse_row(const Vector& v) {
  RationalRow row;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (sgn(v[c]) != 0) row.emplace_back(static_cast<Index>(c), v[c]);
  return row;
}

/// Nullspace vectors read off a reduced echelon form: one per free column.
template <typename Row, typename Negate, typename One>
std::vector<Row> kernel_from_rref(std::size_t cols, const std::vector<Row>& reduced, Negate negate, One one) {
  std::vector<char> is_pivot(cols, 0);
  for (const auto& row : reduced) is_pivot[row.front().first] = 1;
  std::vector<Row> by_free(cols);
  for (const auto& row : reduced) {
    const Index pivot = row.front().first;
    for (std::size_t e = 1; e < row.size(); ++e) by_free[row[e].first].emplace_back(pivot, negate(row[e].second));
  }
  std::vector<Row> kernel;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    Row v = std::move(by_free[c]);
    v.emplace_back(static_cast<Index>(c), one);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  return kernel;
}

inline RowBasis nullspace_dense(const SparseSystem& system) {
  ExactEchelon echelon(system.cols());
  for (const auto& row : system.rows()) echelon.insert(row);
  auto kernel = kernel_from_rref(
      system.cols(), echelon.reduced_rows(), [](const Scalar& q) { return Scalar(-q); }, Scalar(1));
  ExactEchelon canonical(system.cols());
  for (const auto& v : kernel) canonical.insert(v);
  return to_basis(system.cols(), canonical.reduced_rows());
}

struct ModularSolution {
  std::size_t rank = 0;
  std::vector<Index> signature;  // pivots of the system, then pivots of the kernel
  std::vector<ModRow> kernel;    // reduced echelon rows of the kernel
};

inline std::optional<ModularSolution> solve_mod(const SparseSystem& system, Residue p) {
  ModEchelon echelon(system.cols(), p);
  ModRow reduced;
  for (const auto& row : system.rows()) {
    reduced.clear();
    for (const auto& [c, q] : row) {
      auto r = reduce(q, p);
      if (!r) return std::nullopt;
      reduced.emplace_back(c, *r);
    }
    echelon.insert(reduced);
  }
  ModularSolution out;
  out.rank = echelon.rank();
  out.signature = echelon.pivots();
  auto kernel = kernel_from_rref(
      system.cols(), echelon.reduced_rows(), [p](Residue v) { return v ? p - v : 0; }, Residue{1});
  ModEchelon canonical(system.cols(), p);
  for (const auto& v : kernel) canonical.insert(v);
  for (Index pivot : canonical.pivots()) out.signature.push_back(pivot);
  out.kernel = canonical.reduced_rows();
  return out;
}

/// Exact check that every candidate vector is annihilated by the system.
inline bool annihilates(const SparseSystem& system, const std::vector<Vector>& candidates) {
  std::vector<IntegerRow> rows;
  rows.reserve(system.rows().size());
  for (const auto& row : system.rows()) rows.push_back(integerize(row));
  for (const auto& v : candidates) {
    IntegerRow x = integerize(sparse_row(v));
    std::vector<const Integer*> dense(system.cols(), nullptr);
    for (const auto& [c, value] : x) dense[c] = &value;
    Integer acc;
    for (const auto& row : rows) {
      acc = 0;
      for (const auto& [c, a] : row)
        if (dense[c]) mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), dense[c]->get_mpz_t());
      if (sgn(acc) != 0) return false;
    }
  }
  return true;
}

inline RowBasis nullspace_modular(const SparseSystem& system, std::size_t prime_budget) {
  const std::size_t n = system.cols();
  std::optional<ModularSolution> best;
  std::vector<Integer> residues;  // kernel rows, row-major k x n
  Integer modulus = 1;
  std::size_t used = 0;
  for (Residue p : word_primes(prime_budget)) {
    ++used;
    auto solution = solve_mod(system, p);
    if (!solution) continue;
    const bool better = !best || solution->rank > best->rank ||
                        (solution->rank == best->rank && solution->signature < best->signature);
    if (!better && (solution->rank != best->rank || solution->signature != best->signature)) continue;
    const std::size_t k = solution->kernel.size();
    if (better) {
      best = std::move(*solution);
      residues.assign(k * n, Integer(0));
      for (std::size_t i = 0; i < k; ++i)
        for (const auto& [c, v] : best->kernel[i]) residues[i * n + c] = v;
      modulus = p;
    } else {
      Residue m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      std::vector<Residue> dense(n);
      for (std::size_t i = 0; i < k; ++i) {
        std::fill(dense.begin(), dense.end(), 0);
        for (const auto& [c, v] : solution->kernel[i]) dense[c] = v;
        for (std::size_t c = 0; c < n; ++c) crt_accumulate(residues[i * n + c], modulus, m_inv, dense[c], p);
      }
      modulus *= p;
    }

    const std::size_t k_best = best->kernel.size();
    std::vector<Vector> candidate(k_best, zero_vector(n));
    bool reconstructed = true;
    for (std::size_t i = 0; i < k_best && reconstructed; ++i)
      for (std::size_t c = 0; c < n; ++c) {
        if (sgn(residues[i * n + c]) == 0) continue;
        auto q = rational_reconstruct(residues[i * n + c], modulus);
        if (!q) {
          reconstructed = false;
          break;
        }
        candidate[i][c] = std::move(*q);
      }
    // Kernel dimension over Q is at most n - rank_p; annihilation of k
    // independent echelon rows certifies equality.
    if (reconstructed && k_best == n - best->rank && annihilates(system, candidate))
      return RowBasis{n, std::move(candidate)};
  }
  throw ReconstructionFailed(used);
}

}  // namespace detail

inline RowBasis nullspace(const SparseSystem& system, const SolveOptions& options = {}) {
  if (options.strategy.value_or(Strategy::dense) == Strategy::modular) return detail::nullspace_modular(system, options.prime_budget);
  return detail::nullspace_dense(system);
}

inline RowBasis nullspace(const DenseMatrix& m, Strategy strategy = Strategy::dense, std::size_t prime_budget = 64) {
  return nullspace(SparseSystem::from_dense(m), SolveOptions{strategy, prime_budget});
}

struct RrefResult {
  DenseMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

inline RrefResult rref(const DenseMatrix& m) {
  detail::ExactEchelon echelon(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) echelon.insert(detail::sparse_row(m.row(r)));
  RrefResult out{DenseMatrix(m.rows(), m.cols()), echelon.rank(), {}};
  auto rows = echelon.reduced_rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.pivot_cols.push_back(rows[r].front().first);
    for (const auto& [c, q] : rows[r]) out.reduced(r, c) = q;
  }
  return out;
}

/// Canonical basis of the span of arbitrary vectors.
inline RowBasis span_of(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  detail::ExactEchelon echelon(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch(ambient_dim, v.size());
    echelon.insert(detail::sparse_row(v));
  }
  return detail::to_basis(ambient_dim, echelon.reduced_rows());
}

inline RowBasis zero_space(std::size_t n) { return RowBasis{n, {}}; }

inline RowBasis full_space(std::size_t n) {
  RowBasis b{n, {}};
  for (std::size_t i = 0; i < n; ++i) b.vectors.push_back(unit_vector(n, i));
  return b;
}

/// Residue of v after reduction against the echelon basis.
inline Vector reduce_against(const RowBasis& a, Vector v) {
  if (v.size() != a.ambient_dim) throw DimensionMismatch(a.ambient_dim, v.size());
  const auto pivots = a.pivots();
  for (std::size_t i = 0; i < a.vectors.size(); ++i) {
    Scalar coef = v[pivots[i]];
    if (sgn(coef) == 0) continue;
    for (std::size_t c = pivots[i]; c < v.size(); ++c)
      if (sgn(a.vectors[i][c]) != 0) v[c] -= coef * a.vectors[i][c];
  }
  return v;
}

inline bool contains_vector(const RowBasis& a, const Vector& v) { return is_zero(reduce_against(a, v)); }

/// Coefficients of v in the basis vectors of a, if v lies in the span.
inline std::optional<Vector> coordinates(const RowBasis& a, const Vector& v) {
  if (v.size() != a.ambient_dim) throw DimensionMismatch(a.ambient_dim, v.size());
  Vector coef;
  for (std::size_t p : a.pivots()) coef.push_back(v[p]);
  Vector rebuilt = zero_vector(a.ambient_dim);
  for (std::size_t i = 0; i < coef.size(); ++i)
    if (sgn(coef[i]) != 0) rebuilt = rebuilt + coef[i] * a.vectors[i];
  if (rebuilt != v) return std::nullopt;
  return coef;
}

/// Standard-dot-product orthogonal complement.
inline RowBasis orthogonal_complement(const RowBasis& a) {
  SparseSystem s(a.ambient_dim);
  for (const auto& v : a.vectors) s.add_row(detail::sparse_row(v));
  return nullspace(s);
}

struct SubspaceComparison {
  bool equal = false;
  bool a_in_b = false;
  bool b_in_a = false;
  RowBasis intersection;
  RowBasis sum;
};

inline SubspaceComparison subspace_ops(const RowBasis& a, const RowBasis& b) {
  if (a.ambient_dim != b.ambient_dim) throw DimensionMismatch(a.ambient_dim, b.ambient_dim);
  SubspaceComparison out;
  std::vector<Vector> all = a.vectors;
  all.insert(all.end(), b.vectors.begin(), b.vectors.end());
  out.sum = span_of(a.ambient_dim, all);
  // A ∩ B = (A^⊥ + B^⊥)^⊥
  auto pa = orthogonal_complement(a);
  auto pb = orthogonal_complement(b);
  std::vector<Vector> perp = pa.vectors;
  perp.insert(perp.end(), pb.vectors.begin(), pb.vectors.end());
  out.intersection = orthogonal_complement(span_of(a.ambient_dim, perp));
  out.equal = a == b;
  out.a_in_b = out.sum == b;
  out.b_in_a = out.sum == a;
  return out;
}

inline bool is_subspace(const RowBasis& a, const RowBasis& b) {
  if (a.ambient_dim != b.ambient_dim) throw DimensionMismatch(a.ambient_dim, b.ambient_dim);
  return std::all_of(a.vectors.begin(), a.vectors.end(), [&](const Vector& v) { return contains_vector(b, v); });
}

/// One solution of m x = rhs (free variables set to zero), if consistent.
inline std::optional<Vector> solve(const DenseMatrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch(m.rows(), rhs.size());
  DenseMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = rhs[r];
  }
  auto reduced = rref(augmented);
  Vector x = zero_vector(m.cols());
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    if (reduced.pivot_cols[r] == m.cols()) return std::nullopt;
    x[reduced.pivot_cols[r]] = reduced.reduced(r, m.cols());
  }
  return x;
}

}  // namespace jordan
