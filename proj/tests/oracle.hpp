#pragma once

// Reference implementations for tests. Deliberately naive: dense
// Gauss-Jordan on rational grids and direct evaluation of identities from the
// raw structure constants. Nothing here calls the library's solvers.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "jordan/algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Grid = std::vector<std::vector<Q>>;
using Vec = std::vector<Q>;

struct Rref {
  Grid rows;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

inline Rref rref(Grid m, std::size_t cols) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

/// Canonical (reduced echelon) basis of the kernel.
inline Grid nullspace(const Grid& m, std::size_t cols) {
  Rref red = rref(m, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : red.pivots) is_pivot[p] = 1;
  Grid basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.rows[i][f];
    basis.push_back(v);
  }
  return rref(basis, cols).rows;
}

inline Grid span(const Grid& vectors, std::size_t cols) { return rref(vectors, cols).rows; }

/// Dense c[i][j][k] read back from a table one entry at a time.
struct Constants {
  std::size_t n;
  std::vector<Q> c;
  explicit Constants(const jordan::StructureTable& t) : n(t.dim()), c(n * n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = t.at(i, j, k);
  }
  Vec mul(const Vec& x, const Vec& y) const {
    Vec z(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        Q s = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) z[k] += s * c[(i * n + j) * n + k];
      }
    }
    return z;
  }
};

inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline bool zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// (x^2 y) x - x^2 (x y)
inline Vec jordan_defect(const Constants& k, const Vec& x, const Vec& y) {
  Vec x2 = k.mul(x, x);
  return sub(k.mul(k.mul(x2, y), x), k.mul(x2, k.mul(x, y)));
}

/// Small-integer vectors from a fixed-seed generator.
class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint32_t>(hi - lo + 1)); }
  Vec vector(std::size_t n, long bound = 3) {
    Vec v(n);
    for (auto& x : v) x = integer(-bound, bound);
    return v;
  }
  Grid matrix(std::size_t rows, std::size_t cols, long bound = 3) {
    Grid m;
    for (std::size_t r = 0; r < rows; ++r) m.push_back(vector(cols, bound));
    return m;
  }

 private:
  std::mt19937 rng_;
};

/// Matrix of an operator as a grid (columns are images).
inline Vec apply(const Grid& op, const Vec& x) {
  Vec y(op.size(), 0);
  for (std::size_t r = 0; r < op.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) y[r] += op[r][c] * x[c];
  return y;
}

}  // namespace oracle
