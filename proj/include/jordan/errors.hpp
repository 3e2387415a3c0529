#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jordan {

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                              ", got " + std::to_string(got)) {}
};

// Prime budget ran out before the multi-modular nullspace could be certified.
struct ReconstructionFailed : std::runtime_error {
  explicit ReconstructionFailed(std::size_t primes_used)
      : std::runtime_error("rational reconstruction failed after " +
                           std::to_string(primes_used) + " primes") {}
};

struct ZeroParameter : std::invalid_argument {
  explicit ZeroParameter(std::size_t index)
      : std::invalid_argument("parameter " + std::to_string(index) + " is zero"), index(index) {}
  std::size_t index;
};

struct NotCommutative : std::invalid_argument {
  NotCommutative(std::size_t i, std::size_t j)
      : std::invalid_argument("structure table is not commutative at (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")"),
        i(i), j(j) {}
  std::size_t i, j;
};

struct NotSkew : std::invalid_argument {
  NotSkew() : std::invalid_argument("element is not skew under the involution") {}
};

struct IrrationalSurd : std::domain_error {
  explicit IrrationalSurd(const std::string& what)
      : std::domain_error("square root is not rational: " + what) {}
};

// Raised when an operator subspace is not closed under the commutator.
struct NotClosed : std::runtime_error {
  NotClosed(std::size_t i, std::size_t j)
      : std::runtime_error("commutator of basis elements " + std::to_string(i) + " and " +
                           std::to_string(j) + " leaves the subspace"),
        i(i), j(j) {}
  std::size_t i, j;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ViolationKind { NotCommutative, NotJordan, NotAntisymmetric, NotJacobi };

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotCommutative: return "NotCommutative";
    case ViolationKind::NotJordan: return "NotJordan";
    case ViolationKind::NotAntisymmetric: return "NotAntisymmetric";
    case ViolationKind::NotJacobi: return "NotJacobi";
  }
  return "Unknown";
}

struct ValidationError : std::runtime_error {
  ValidationError(ViolationKind kind, std::vector<std::size_t> indices)
      : std::runtime_error(format(kind, indices)), kind(kind), indices(std::move(indices)) {}

  ViolationKind kind;
  std::vector<std::size_t> indices;

 private:
  static std::string format(ViolationKind kind, const std::vector<std::size_t>& indices) {
    std::string s = std::string("validation failed: ") + to_string(kind) + " at (";
    for (std::size_t n = 0; n < indices.size(); ++n) {
      if (n) s += ", ";
      s += std::to_string(indices[n]);
    }
    return s + ")";
  }
};

struct BadSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace jordan
