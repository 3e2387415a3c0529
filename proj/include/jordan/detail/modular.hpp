#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "jordan/detail/exact_echelon.hpp"

namespace jordan::detail {

using Residue = std::uint64_t;

inline Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % p);
}

// p < 2^63, so a + b never wraps.
inline Residue add_mod(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}

inline Residue sub_mod(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + (p - b); }

inline Residue pow_mod(Residue base, Residue exp, Residue p) {
  Residue result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

inline Residue inv_mod(Residue a, Residue p) { return pow_mod(a, p - 2, p); }

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// The first `count` primes below 2^63 in descending order.
inline std::vector<Residue> word_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<Residue> cache;
  std::lock_guard lock(mutex);
  Residue candidate = cache.empty() ? (Residue{1} << 63) - 1 : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

/// Residue of an exact rational, or nullopt if p divides the denominator.
inline std::optional<Residue> reduce(const Scalar& q, Residue p) {
  Residue den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  Residue num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return mul_mod(num, inv_mod(den, p), p);
}

using ModRow = std::vector<std::pair<Index, Residue>>;

/// Incremental Gauss-Jordan modulo p with unit pivots.
class ModEchelon {
 public:
  ModEchelon(std::size_t cols, Residue p) : cols_(cols), p_(p), scratch_(cols, 0), touched_(cols, 0) {}

  bool insert(const ModRow& input) {
    // Dense scratch accumulation keeps the per-row reduction linear in fill.
    std::vector<Index> support;
    for (const auto& [c, v] : input) {
      if (v == 0) continue;
      if (!touched_[c]) {
        touched_[c] = 1;
        support.push_back(c);
      }
      scratch_[c] = add_mod(scratch_[c], v, p_);
    }
    std::vector<Index> hits;
    for (Index c : support)
      if (scratch_[c] != 0 && rows_.count(c)) hits.push_back(c);
    for (Index pivot : hits) {
      Residue coef = scratch_[pivot];
      if (coef == 0) continue;
      for (const auto& [c, v] : rows_.at(pivot)) {
        if (!touched_[c]) {
          touched_[c] = 1;
          support.push_back(c);
        }
        scratch_[c] = sub_mod(scratch_[c], mul_mod(coef, v, p_), p_);
      }
    }
    std::sort(support.begin(), support.end());
    ModRow row;
    for (Index c : support) {
      if (scratch_[c] != 0) row.emplace_back(c, scratch_[c]);
      scratch_[c] = 0;
      touched_[c] = 0;
    }
    if (row.empty()) return false;
    const Index q = row.front().first;
    const Residue inv = inv_mod(row.front().second, p_);
    for (auto& [c, v] : row) v = mul_mod(v, inv, p_);
    for (auto& [pivot, basis_row] : rows_) {
      auto it = std::lower_bound(basis_row.begin(), basis_row.end(), q,
                                 [](const auto& e, Index c) { return e.first < c; });
      if (it == basis_row.end() || it->first != q) continue;
      basis_row = axpy(basis_row, it->second, row);
    }
    rows_.emplace(q, std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<Index> pivots() const {
    std::vector<Index> out;
    for (const auto& [pivot, row] : rows_) out.push_back(pivot);
    return out;
  }

  std::vector<ModRow> reduced_rows() const {
    std::vector<ModRow> out;
    for (const auto& [pivot, row] : rows_) out.push_back(row);
    return out;
  }

 private:
  // x - a*y
  ModRow axpy(const ModRow& x, Residue a, const ModRow& y) const {
    ModRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, sub_mod(0, mul_mod(a, y[j].second, p_), p_));
        ++j;
      } else {
        Residue v = sub_mod(x[i].second, mul_mod(a, y[j].second, p_), p_);
        if (v) out.emplace_back(x[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t cols_;
  Residue p_;
  std::vector<Residue> scratch_;
  std::vector<char> touched_;
  std::map<Index, ModRow> rows_;
};

/// Wang's rational reconstruction with symmetric bounds sqrt(M/2).
inline std::optional<Scalar> rational_reconstruct(const Integer& residue, const Integer& modulus) {
  Integer bound;
  Integer half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = modulus, r1 = residue % modulus;
  if (sgn(r1) < 0) r1 += modulus;
  Integer t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Scalar out(r1, t1);
  out.canonicalize();
  return out;
}

/// Folds a new residue modulo p into x (mod m); m is updated by the caller.
inline void crt_accumulate(Integer& x, const Integer& m, Residue m_inv_mod_p, Residue r, Residue p) {
  Residue x_mod_p = mpz_fdiv_ui(x.get_mpz_t(), p);
  Residue k = mul_mod(sub_mod(r, x_mod_p, p), m_inv_mod_p, p);
  mpz_addmul_ui(x.get_mpz_t(), m.get_mpz_t(), k);
}

}  // namespace jordan::detail
