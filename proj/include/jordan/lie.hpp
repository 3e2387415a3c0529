#pragma once

// Lie-algebra layer over validated structure tables: centers, derived
// algebras, the Killing form, the centroid, ideals, quotients, inner and
// (triple) derivations, and a simplicity certificate.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jordan/derivations.hpp"
#include "jordan/lie_table.hpp"

namespace jordan {

/// Structure constants of the commutator on the canonical basis of `s`.
/// Throws NotClosed(i, j) when [B_i, B_j] leaves the span.
inline LieTable from_operators(const OperatorSubspace& s) {
  const std::size_t m = s.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("D" + std::to_string(i + 1));
  StructureTable t(m, std::move(names));
  auto ops = s.elements();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto coords = coordinates(s.basis, operator_commutator(ops[i], ops[j]).flatten());
      if (!coords) throw NotClosed(i, j);
      t.set_product(i, j, *coords);
      t.set_product(j, i, Scalar(-1) * *coords);
    }
  return LieTable(std::move(t), s);
}

/// {x : [x, e_i] = 0 for all i}
inline RowBasis lie_center(const LieTable& l) {
  const std::size_t n = l.dim();
  SparseSystem system(n);
  std::vector<detail::RationalRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& row : rows) row.clear();
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& [k, c] : l.table().product(a, i)) rows[k].emplace_back(static_cast<detail::Index>(a), c);
    for (auto& row : rows) system.add_row(std::move(row));
  }
  return nullspace(system);
}

/// span{[e_i, e_j]}
inline RowBasis derived(const LieTable& l) {
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) brackets.push_back(basis_product(l.table(), i, j));
  return span_of(l.dim(), brackets);
}

/// Matrix of ad e_i: column j holds [e_i, e_j].
inline LinearOperator ad(const LieTable& l, std::size_t i) {
  return {left_mult_matrix(l.table(), unit_vector(l.dim(), i))};
}

/// kappa(e_a, e_b) = trace(ad e_a ad e_b) = sum_{p,q} c[a][p][q] c[b][q][p].
inline DenseMatrix killing(const LieTable& l) {
  const std::size_t n = l.dim();
  const auto& t = l.table();
  DenseMatrix k(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Scalar sum = 0;
      for (std::size_t p = 0; p < n; ++p)
        for (const auto& [q, c] : t.product(a, p)) {
          Scalar other = t.at(b, q, p);
          if (sgn(other) != 0) sum += c * other;
        }
      k(a, b) = sum;
      k(b, a) = sum;
    }
  return k;
}

/// Smallest ideal containing `seed`.
inline RowBasis ideal_generated(const LieTable& l, const RowBasis& seed) { return ideal_closure(l.table(), seed); }

/// Lie subalgebra generated by a set of vectors.
inline RowBasis subalgebra_generated(const LieTable& l, const std::vector<Vector>& gens) {
  RowBasis span = span_of(l.dim(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto current = span.vectors;
    std::vector<Vector> all = current;
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        Vector w = l.bracket(current[a], current[b]);
        if (!contains_vector(span, w)) {
          all.push_back(std::move(w));
          span = span_of(l.dim(), all);
          grew = true;
        }
      }
  }
  return span;
}

/// Basis elements, taken greedily in index order, that generate l as a Lie algebra.
inline std::vector<std::size_t> lie_generators(const LieTable& l) {
  std::vector<std::size_t> gens;
  RowBasis generated = zero_space(l.dim());
  for (std::size_t i = 0; i < l.dim() && generated.dim() < l.dim(); ++i) {
    if (contains_vector(generated, unit_vector(l.dim(), i))) continue;
    gens.push_back(i);
    std::vector<Vector> vectors;
    for (std::size_t g : gens) vectors.push_back(unit_vector(l.dim(), g));
    generated = subalgebra_generated(l, vectors);
  }
  return gens;
}

/// {phi : phi ad x = ad x phi for all x}, as an operator space. Commuting with
/// ad of a generating set is equivalent since ad [x, y] = [ad x, ad y].
inline OperatorSubspace centroid(const LieTable& l, const SolveOptions& options = {}) {
  const std::size_t n = l.dim();
  const auto& t = l.table();
  SparseSystem system(n * n);
  std::vector<detail::RationalRow> rows(n * n);
  for (std::size_t x : lie_generators(l)) {
    for (auto& row : rows) row.clear();
    // (phi ad_x)[r][c] = sum_m phi[r][m] c[x][c][m]
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [m, v] : t.product(x, c))
        for (std::size_t r = 0; r < n; ++r) rows[r * n + c].emplace_back(detail::op_index(n, r, m), v);
    // (ad_x phi)[r][c] = sum_m c[x][m][r] phi[m][c]
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& [r, v] : t.product(x, m))
        for (std::size_t c = 0; c < n; ++c) rows[r * n + c].emplace_back(detail::op_index(n, m, c), -v);
    for (auto& row : rows) system.add_row(std::move(row));
  }
  return {n, nullspace(system, resolve_for_dim(n, options))};
}

inline bool is_ideal(const LieTable& l, const RowBasis& s) {
  for (const auto& v : s.vectors)
    for (std::size_t i = 0; i < l.dim(); ++i)
      if (!contains_vector(s, l.bracket(v, unit_vector(l.dim(), i)))) return false;
  return true;
}

enum class SimplicityStatus { Simple, NotSimple, Inconclusive };

inline const char* to_string(SimplicityStatus s) {
  switch (s) {
    case SimplicityStatus::Simple: return "Simple";
    case SimplicityStatus::NotSimple: return "NotSimple";
    case SimplicityStatus::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

struct SimplicityCertificate {
  bool killing_nondegenerate = false;
  std::size_t centroid_dim = 0;
};

struct SimplicityVerdict {
  SimplicityStatus status = SimplicityStatus::Inconclusive;
  std::optional<RowBasis> witness;  // proper nonzero ideal when NotSimple (dim >= 2)
  SimplicityCertificate certificate;
};

namespace detail {

using Polynomial = std::vector<Scalar>;  // coefficients, constant term first

inline DenseMatrix evaluate(const Polynomial& p, const DenseMatrix& m) {
  const std::size_t n = m.rows();
  DenseMatrix result(n, n), power = DenseMatrix::identity(n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) != 0) result = result + p[i] * power;
    if (i + 1 < p.size()) power = power * m;
  }
  return result;
}

inline Scalar evaluate(const Polynomial& p, const Scalar& x) {
  Scalar acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Monic minimal polynomial via linear dependence among I, m, m^2, ...
inline Polynomial minimal_polynomial(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<DenseMatrix> powers{DenseMatrix::identity(n)};
  for (;;) {
    DenseMatrix next = powers.back() * m;
    DenseMatrix columns(n * n, powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < n * n; ++r) columns(r, c) = powers[c].flatten()[r];
    if (auto coeffs = solve(columns, next.flatten())) {
      Polynomial p;
      for (const auto& c : *coeffs) p.push_back(-c);
      p.push_back(1);
      return p;
    }
    powers.push_back(std::move(next));
  }
}

// Positive divisors by trial division; empty if the value is too large to factor cheaply.
inline std::vector<Integer> divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> out;
  if (v > Integer("1000000000000")) return out;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  return out;
}

inline std::vector<Scalar> rational_roots(Polynomial p) {
  std::vector<Scalar> roots;
  while (!p.empty() && sgn(p.front()) == 0) {
    if (std::find(roots.begin(), roots.end(), Scalar(0)) == roots.end()) roots.push_back(0);
    p.erase(p.begin());
  }
  if (p.size() < 2) return roots;
  Integer lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  const Integer lead = Integer(p.back() * lcm);
  const Integer trail = Integer(p.front() * lcm);
  for (const auto& num : divisors(trail))
    for (const auto& den : divisors(lead))
      for (int sign : {1, -1}) {
        Scalar candidate(sign * num, den);
        candidate.canonicalize();
        if (sgn(evaluate(p, candidate)) == 0 && std::find(roots.begin(), roots.end(), candidate) == roots.end())
          roots.push_back(candidate);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// p / (x - root) by synthetic division; the remainder is assumed zero.
inline Polynomial deflate(const Polynomial& p, const Scalar& root) {
  Polynomial q(p.size() - 1);
  Scalar carry = 0;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    carry = p[i + 1] + carry * root;
    q[i] = carry;
  }
  return q;
}

inline RowBasis column_space(const DenseMatrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return span_of(m.rows(), cols);
}

inline bool lex_less(const RowBasis& a, const RowBasis& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.vectors < b.vectors;
}

/// Images of the centroid idempotents q(phi) / q(lambda) over the rational
/// eigenvalues lambda of phi, where q = minpoly / (x - lambda).
inline std::vector<RowBasis> idempotent_images(const DenseMatrix& phi) {
  const std::size_t n = phi.rows();
  std::vector<RowBasis> out;
  Polynomial minpoly = minimal_polynomial(phi);
  if (minpoly.size() < 3) return out;  // degree 1: phi is scalar
  for (const auto& lambda : rational_roots(minpoly)) {
    Polynomial q = deflate(minpoly, lambda);
    Scalar q_at = evaluate(q, lambda);
    if (sgn(q_at) == 0) continue;  // repeated root
    DenseMatrix e = (Scalar(1) / q_at) * evaluate(q, phi);
    if (!(e * e == e) || e.is_zero() || e == DenseMatrix::identity(n)) continue;
    out.push_back(column_space(e));
  }
  return out;
}

}  // namespace detail

/// Killing-form and centroid certificate.
///  - dim <= 1 or abelian: NotSimple (witness span{e_1} when dim >= 2).
///  - degenerate Killing form: the ideal generated by its radical is a witness
///    when proper; otherwise Inconclusive.
///  - nondegenerate, centroid dim 1: Simple.
///  - centroid dim >= 2: a rational idempotent of the centroid splits off an
///    ideal. Candidates are the centroid basis elements, then 32 fixed
///    small-integer combinations. The smallest image (ties: lexicographically
///    least canonical basis) from the first productive candidate is returned.
inline SimplicityVerdict simplicity(const LieTable& l, const SolveOptions& options = {}) {
  const std::size_t n = l.dim();
  SimplicityVerdict verdict;
  if (n <= 1) {
    verdict.status = SimplicityStatus::NotSimple;
    return verdict;
  }
  if (l.is_abelian()) {
    verdict.status = SimplicityStatus::NotSimple;
    verdict.witness = span_of(n, {unit_vector(n, 0)});
    return verdict;
  }
  const RowBasis radical = nullspace(killing(l));
  if (radical.dim() > 0) {
    RowBasis ideal = ideal_generated(l, radical);
    if (ideal.dim() < n) {
      verdict.status = SimplicityStatus::NotSimple;
      verdict.witness = std::move(ideal);
    }
    return verdict;
  }
  verdict.certificate.killing_nondegenerate = true;
  const OperatorSubspace cent = centroid(l, options);
  verdict.certificate.centroid_dim = cent.dim();
  if (cent.dim() == 1) {
    verdict.status = SimplicityStatus::Simple;
    return verdict;
  }

  std::vector<DenseMatrix> candidates;
  for (const auto& op : cent.elements()) candidates.push_back(op.matrix);
  std::uint32_t state = 12345;
  auto next_coefficient = [&state] {
    state = state * 1103515245u + 12345u;
    return static_cast<long>((state >> 16) % 7) - 3;  // in [-3, 3]
  };
  for (int trial = 0; trial < 32; ++trial) {
    DenseMatrix combo(n, n);
    for (const auto& op : cent.elements()) combo = combo + make_scalar(next_coefficient()) * op.matrix;
    candidates.push_back(std::move(combo));
  }
  for (const auto& phi : candidates) {
    auto images = detail::idempotent_images(phi);
    std::erase_if(images, [&](const RowBasis& b) { return b.dim() == 0 || b.dim() == n || !is_ideal(l, b); });
    if (images.empty()) continue;
    verdict.status = SimplicityStatus::NotSimple;
    verdict.witness = *std::min_element(images.begin(), images.end(), detail::lex_less);
    return verdict;
  }
  return verdict;
}

/// L / Z(L) on the complement basis given by the non-pivot coordinates of the
/// center's echelon basis, in index order.
inline LieTable quotient_by_center(const LieTable& l) {
  const std::size_t n = l.dim();
  const RowBasis z = lie_center(l);
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : z.pivots()) is_pivot[p] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) keep.push_back(i);
  std::vector<std::string> names;
  for (std::size_t i : keep) names.push_back(l.table().basis_names()[i]);
  StructureTable t(keep.size(), std::move(names));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      Vector v = reduce_against(z, basis_product(l.table(), keep[a], keep[b]));
      for (std::size_t c = 0; c < keep.size(); ++c)
        if (sgn(v[keep[c]]) != 0) t.set(a, b, c, v[keep[c]]);
    }
  return LieTable(std::move(t));
}

/// span{ad e_i}
inline OperatorSubspace ad_span(const LieTable& l) {
  std::vector<LinearOperator> ops;
  for (std::size_t i = 0; i < l.dim(); ++i) ops.push_back(ad(l, i));
  return operator_span(l.dim(), ops);
}

inline OperatorSubspace lie_der(const LieTable& l, const SolveOptions& options = {}) {
  return {l.dim(), nullspace(detail::derivation_system(l.table(), false), resolve_for_dim(l.dim(), options))};
}

inline OperatorSubspace lie_tder(const LieTable& l, const SolveOptions& options = {}) {
  return {l.dim(), nullspace(detail::triple_derivation_system(l.table(), false), resolve_for_dim(l.dim(), options))};
}

inline LieTable lie_direct_sum(const LieTable& a, const LieTable& b) {
  return LieTable(direct_sum(a.table(), b.table()));
}

}  // namespace jordan
