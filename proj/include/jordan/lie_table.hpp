#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>

#include "jordan/algebra.hpp"
#include "jordan/operators.hpp"

namespace jordan {

inline std::optional<std::pair<std::size_t, std::size_t>> first_antisymmetry_violation(const StructureTable& t) {
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (!t.product(i, i).empty()) return std::pair{i, i};
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const Terms& a = t.product(i, j);
      const Terms& b = t.product(j, i);
      if (a.size() != b.size()) return std::pair{i, j};
      for (std::size_t n = 0; n < a.size(); ++n)
        if (a[n].first != b[n].first || a[n].second != -b[n].second) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

/// First triple i < j < k with [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] != 0.
/// Triples with a repeated index hold by antisymmetry.
inline std::optional<std::array<std::size_t, 3>> first_jacobi_violation(const StructureTable& t) {
  const std::size_t n = t.dim();
  using detail::basis_terms;
  std::vector<Scalar> acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), Scalar(0));
        detail::add_terms(acc, detail::sparse_product(t, t.product(i, j), basis_terms(k)), 1);
        detail::add_terms(acc, detail::sparse_product(t, t.product(j, k), basis_terms(i)), 1);
        detail::add_terms(acc, detail::sparse_product(t, t.product(k, i), basis_terms(j)), 1);
        if (!is_zero(acc)) return std::array{i, j, k};
      }
  return std::nullopt;
}

/// Antisymmetric structure table satisfying Jacobi, validated on construction.
/// `realization` optionally carries an operator space whose canonical basis
/// corresponds index-wise to the Lie basis.
class LieTable {
 public:
  LieTable() = default;

  explicit LieTable(StructureTable table, std::optional<OperatorSubspace> realization = std::nullopt)
      : table_(std::move(table)), realization_(std::move(realization)) {
    if (auto v = first_antisymmetry_violation(table_))
      throw ValidationError(ViolationKind::NotAntisymmetric, {v->first, v->second});
    if (auto v = first_jacobi_violation(table_))
      throw ValidationError(ViolationKind::NotJacobi, {(*v)[0], (*v)[1], (*v)[2]});
    if (realization_ && realization_->dim() != table_.dim())
      throw DimensionMismatch(table_.dim(), realization_->dim());
  }

  const StructureTable& table() const { return table_; }
  std::size_t dim() const { return table_.dim(); }
  const std::optional<OperatorSubspace>& realization() const { return realization_; }

  Vector bracket(const Vector& x, const Vector& y) const { return product(table_, x, y); }

  bool is_abelian() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!table_.product(i, j).empty()) return false;
    return true;
  }

 private:
  StructureTable table_;
  std::optional<OperatorSubspace> realization_;
};

}  // namespace jordan
