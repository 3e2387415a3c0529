#pragma once

#include <cstddef>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

/// Subspace of n x n operator matrices, stored as a canonical RowBasis over
/// the row-major flattening. Houses Der, TDer, Inn and ad.
struct OperatorSubspace {
  std::size_t algebra_dim = 0;
  RowBasis basis;

  std::size_t dim() const { return basis.dim(); }

  LinearOperator element(std::size_t i) const {
    return {DenseMatrix::unflatten(algebra_dim, basis.vectors.at(i))};
  }

  std::vector<LinearOperator> elements() const {
    std::vector<LinearOperator> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(element(i));
    return out;
  }

  bool contains(const LinearOperator& op) const {
    if (op.dim() != algebra_dim) throw DimensionMismatch(algebra_dim, op.dim());
    return contains_vector(basis, op.flatten());
  }

  friend bool operator==(const OperatorSubspace&, const OperatorSubspace&) = default;
};

inline OperatorSubspace operator_span(std::size_t algebra_dim, const std::vector<LinearOperator>& ops) {
  std::vector<Vector> flat;
  for (const auto& op : ops) {
    if (op.dim() != algebra_dim) throw DimensionMismatch(algebra_dim, op.dim());
    flat.push_back(op.flatten());
  }
  return {algebra_dim, span_of(algebra_dim * algebra_dim, flat)};
}

inline bool is_subspace(const OperatorSubspace& a, const OperatorSubspace& b) {
  return is_subspace(a.basis, b.basis);
}

/// Block-diagonal embedding of operator spaces on the two summands of a
/// direct sum; the result is the space of diag(D1, 0) + diag(0, D2).
inline OperatorSubspace block_embed(const OperatorSubspace& a, const OperatorSubspace& b) {
  const std::size_t n1 = a.algebra_dim, n2 = b.algebra_dim, n = n1 + n2;
  std::vector<LinearOperator> ops;
  for (const auto& op : a.elements()) {
    DenseMatrix m(n, n);
    for (std::size_t r = 0; r < n1; ++r)
      for (std::size_t c = 0; c < n1; ++c) m(r, c) = op.matrix(r, c);
    ops.push_back({std::move(m)});
  }
  for (const auto& op : b.elements()) {
    DenseMatrix m(n, n);
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t c = 0; c < n2; ++c) m(n1 + r, n1 + c) = op.matrix(r, c);
    ops.push_back({std::move(m)});
  }
  return operator_span(n, ops);
}

}  // namespace jordan
