#pragma once

// Fraction-free incremental Gauss-Jordan over the integers. Rows are kept
// primitive (content divided out) with a positive pivot, and every stored row
// is zero in every other row's pivot column, so the final division by the
// pivots yields the reduced row-echelon form directly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "jordan/scalar.hpp"

namespace jordan::detail {

using Index = std::uint32_t;
using IntegerEntry = std::pair<Index, Integer>;
using IntegerRow = std::vector<IntegerEntry>;
using RationalEntry = std::pair<Index, Scalar>;
using RationalRow = std::vector<RationalEntry>;

/// Scales a sparse rational row to a primitive integer row.
inline IntegerRow integerize(const RationalRow& row) {
  Integer lcm = 1;
  for (const auto& [c, q] : row)
    if (sgn(q) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  IntegerRow out;
  out.reserve(row.size());
  for (const auto& [c, q] : row) {
    if (sgn(q) == 0) continue;
    Integer v = lcm / q.get_den() * q.get_num();
    out.emplace_back(c, std::move(v));
  }
  return out;
}

inline void make_primitive(IntegerRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// a*x - b*y on sparse rows.
inline IntegerRow combine(const Integer& a, const IntegerRow& x, const Integer& b, const IntegerRow& y) {
  IntegerRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -(b * y[j].second));
      ++j;
    } else {
      t = a * x[i].second;
      mpz_submul(t.get_mpz_t(), b.get_mpz_t(), y[j].second.get_mpz_t());
      if (sgn(t) != 0) out.emplace_back(x[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

inline const Integer* find_entry(const IntegerRow& row, Index col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const IntegerEntry& e, Index c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

class ExactEchelon {
 public:
  explicit ExactEchelon(std::size_t cols) : cols_(cols) {}

  /// Reduces `row` against the current basis; returns true if it was independent.
  bool insert(IntegerRow row) {
    make_primitive(row);
    // Reducing by one basis row never creates entries in another pivot column.
    std::vector<Index> hits;
    for (const auto& entry : row)
      if (rows_.count(entry.first)) hits.push_back(entry.first);
    for (Index pivot : hits) {
      const IntegerRow& basis_row = rows_.at(pivot);
      const Integer* coef = find_entry(row, pivot);
      if (!coef) continue;
      Integer b = *coef;
      row = combine(basis_row.front().second, row, b, basis_row);
      make_primitive(row);
    }
    if (row.empty()) return false;
    const Index q = row.front().first;
    for (auto& [pivot, basis_row] : rows_) {
      const Integer* coef = find_entry(basis_row, q);
      if (!coef) continue;
      Integer b = *coef;
      basis_row = combine(row.front().second, basis_row, b, row);
      make_primitive(basis_row);
    }
    rows_.emplace(q, std::move(row));
    return true;
  }

  bool insert(const RationalRow& row) { return insert(integerize(row)); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Reduced rows ordered by pivot column, pivots normalized to 1.
  std::vector<RationalRow> reduced_rows() const {
    std::vector<RationalRow> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) {
      RationalRow r;
      r.reserve(row.size());
      const Integer& p = row.front().second;
      for (const auto& [c, v] : row) {
        Scalar q(v, p);
        q.canonicalize();
        r.emplace_back(c, std::move(q));
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  std::vector<Index> pivots() const {
    std::vector<Index> out;
    for (const auto& [pivot, row] : rows_) out.push_back(pivot);
    return out;
  }

 private:
  std::size_t cols_;
  std::map<Index, IntegerRow> rows_;
};

}  // namespace jordan::detail
