#include <gtest/gtest.h>

#include "jordan/derivations.hpp"
#include "jordan/linalg.hpp"
#include "oracle.hpp"

using namespace jordan;

namespace {

DenseMatrix to_dense(const oracle::Grid& g, std::size_t cols) {
  DenseMatrix m(g.size(), cols);
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = g[r][c];
  return m;
}

}  // namespace

TEST(Scalar, LowestTermsPositiveDenominator) {
  Scalar q = make_scalar(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(Scalar(3)), "3");
}

TEST(Scalar, ParseRejectsFloatsAndZeroDenominator) {
  EXPECT_EQ(parse_scalar("-4/6"), make_scalar(-2, 3));
  EXPECT_EQ(parse_scalar("7"), Scalar(7));
  EXPECT_THROW(parse_scalar("0.5"), ParseError);
  EXPECT_THROW(parse_scalar("1e3"), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar(""), ParseError);
  EXPECT_THROW(parse_scalar("--1"), ParseError);
}

TEST(Rref, Identity) {
  auto r = rref(DenseMatrix::identity(3));
  EXPECT_EQ(r.reduced, DenseMatrix::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, Zero) {
  auto r = rref(DenseMatrix(2, 2));
  EXPECT_EQ(r.reduced, DenseMatrix(2, 2));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivot_cols.empty());
}

TEST(Rref, DependentRows) {
  auto r = rref(DenseMatrix::from_rows({{1, 2, 3}, {2, 4, 6}}));
  EXPECT_EQ(r.reduced, DenseMatrix::from_rows({{1, 2, 3}, {0, 0, 0}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0}));
}

TEST(Rref, MatchesOracleAndIsIdempotent) {
  oracle::Sampler s(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + s.integer(0, 6), cols = 1 + s.integer(0, 6);
    auto g = s.matrix(rows, cols, 2);
    auto r = rref(to_dense(g, cols));
    auto expected = oracle::rref(g, cols);
    EXPECT_EQ(r.rank, expected.rows.size());
    EXPECT_EQ(r.pivot_cols, expected.pivots);
    for (std::size_t i = 0; i < expected.rows.size(); ++i) EXPECT_EQ(r.reduced.row(i), expected.rows[i]);
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
  }
}

TEST(Nullspace, IdentityIsInjective) {
  EXPECT_EQ(nullspace(DenseMatrix::identity(4)).dim(), 0u);
  EXPECT_EQ(nullspace(DenseMatrix::identity(4), Strategy::modular).dim(), 0u);
}

TEST(Nullspace, SingleRow) {
  auto n = nullspace(DenseMatrix::from_rows({{1, -1}}));
  ASSERT_EQ(n.dim(), 1u);
  EXPECT_EQ(n.vectors[0], (Vector{1, 1}));
  EXPECT_EQ(nullspace(DenseMatrix::from_rows({{1, -1}}), Strategy::modular), n);
}

TEST(Nullspace, NilpotentLeibnizSystem) {
  auto j = nilpotent_fixture();
  auto system = detail::derivation_system(j.table(), true);
  EXPECT_EQ(system.cols(), 4u);
  EXPECT_LE(system.rows().size(), 12u);
  EXPECT_EQ(nullspace(system).dim(), 2u);
  EXPECT_EQ(nullspace(system, {Strategy::modular, 64}).dim(), 2u);
}

TEST(Nullspace, EmptyAndZeroWidth) {
  EXPECT_EQ(nullspace(DenseMatrix(0, 0)).dim(), 0u);
  EXPECT_EQ(nullspace(SparseSystem(3)), full_space(3));
  EXPECT_EQ(nullspace(SparseSystem(3), {Strategy::modular, 64}), full_space(3));
}

TEST(Nullspace, DenseAndModularAgreeWithOracle) {
  oracle::Sampler s(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 1 + s.integer(0, 7), cols = 1 + s.integer(0, 7);
    auto g = s.matrix(rows, cols, 4);
    auto m = to_dense(g, cols);
    auto dense = nullspace(m, Strategy::dense);
    auto modular = nullspace(m, Strategy::modular);
    EXPECT_EQ(dense, modular) << "trial " << trial;
    auto expected = oracle::nullspace(g, cols);
    ASSERT_EQ(dense.dim(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(dense.vectors[i], expected[i]);
    for (const auto& v : dense.vectors) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(rref(m).rank + dense.dim(), cols);
  }
}

TEST(Nullspace, RationalEntriesAndLargeCoefficients) {
  Integer big = Integer(1) << 90;
  Scalar a(big + 1, 3), b(big - 1, 7);
  a.canonicalize();
  b.canonicalize();
  DenseMatrix m = DenseMatrix::from_rows({{a, -b, 0}, {0, make_scalar(1, 2), -1}});
  auto dense = nullspace(m, Strategy::dense);
  auto modular = nullspace(m, Strategy::modular);
  EXPECT_EQ(dense, modular);
  ASSERT_EQ(dense.dim(), 1u);
  EXPECT_TRUE(is_zero(m.apply(dense.vectors[0])));
}

TEST(Nullspace, ModularBudgetExhaustion) {
  // The kernel vector has numerator and denominator near 2^100, so a single
  // word-sized prime cannot reconstruct it.
  Integer a = (Integer(1) << 100) + 3, b = (Integer(1) << 100) + 5;
  DenseMatrix m = DenseMatrix::from_rows({{Scalar(a), Scalar(-b)}});
  EXPECT_THROW(nullspace(m, Strategy::modular, 1), ReconstructionFailed);
  EXPECT_EQ(nullspace(m, Strategy::modular, 64), nullspace(m, Strategy::dense));
}

TEST(Subspace, FullSpaces) {
  auto ops = subspace_ops(full_space(3), full_space(3));
  EXPECT_TRUE(ops.equal);
  EXPECT_TRUE(ops.a_in_b && ops.b_in_a);
  EXPECT_EQ(ops.intersection, full_space(3));
  EXPECT_EQ(ops.sum, full_space(3));
}

TEST(Subspace, ComplementaryLines) {
  auto a = span_of(2, {{1, 0}});
  auto b = span_of(2, {{0, 1}});
  auto ops = subspace_ops(a, b);
  EXPECT_FALSE(ops.equal);
  EXPECT_FALSE(ops.a_in_b);
  EXPECT_EQ(ops.intersection.dim(), 0u);
  EXPECT_EQ(ops.sum.dim(), 2u);
}

TEST(Subspace, DimensionMismatch) {
  EXPECT_THROW(subspace_ops(full_space(2), full_space(3)), DimensionMismatch);
  EXPECT_THROW(contains_vector(full_space(2), Vector{1, 2, 3}), DimensionMismatch);
}

TEST(Subspace, DimensionLawOnRandomPairs) {
  oracle::Sampler s(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + s.integer(0, 5);
    std::vector<Vector> va, vb;
    for (long i = s.integer(0, 4); i > 0; --i) va.push_back(s.vector(n, 2));
    for (long i = s.integer(0, 4); i > 0; --i) vb.push_back(s.vector(n, 2));
    auto a = span_of(n, va), b = span_of(n, vb);
    auto ops = subspace_ops(a, b);
    EXPECT_EQ(ops.sum.dim() + ops.intersection.dim(), a.dim() + b.dim());
    EXPECT_TRUE(is_subspace(ops.intersection, a));
    EXPECT_TRUE(is_subspace(ops.intersection, b));
    EXPECT_EQ(ops.a_in_b, is_subspace(a, b));
    auto all = va;
    all.insert(all.end(), vb.begin(), vb.end());
    EXPECT_EQ(ops.sum.vectors, all.empty() ? oracle::Grid{} : oracle::span(all, n));
  }
}

TEST(Subspace, CanonicalFormIsSyntactic) {
  auto a = span_of(3, {{1, 1, 0}, {0, 1, 1}});
  auto b = span_of(3, {{2, 3, 1}, {1, 0, -1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.pivots(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a.vectors[0], (Vector{1, 0, -1}));
  EXPECT_EQ(a.vectors[1], (Vector{0, 1, 1}));
}

TEST(ContainsVector, Examples) {
  auto a = span_of(2, {{1, 1}});
  EXPECT_TRUE(contains_vector(a, {0, 0}));
  EXPECT_TRUE(contains_vector(a, {2, 2}));
  EXPECT_FALSE(contains_vector(a, {1, 0}));
  EXPECT_TRUE(contains_vector(zero_space(2), {0, 0}));
}

TEST(Solve, ConsistentAndInconsistent) {
  DenseMatrix m = DenseMatrix::from_rows({{1, 2}, {2, 4}});
  auto x = solve(m, {3, 6});
  ASSERT_TRUE(x);
  EXPECT_EQ(m.apply(*x), (Vector{3, 6}));
  EXPECT_FALSE(solve(m, {1, 0}));
}
