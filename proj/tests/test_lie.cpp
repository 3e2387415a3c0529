#include <gtest/gtest.h>

#include "jordan/lie.hpp"
#include "oracle.hpp"

using namespace jordan;

namespace {

std::vector<Scalar> ones(std::size_t n) { return std::vector<Scalar>(n, Scalar(1)); }

// trace(ad x ad y) by explicit matrix products
DenseMatrix killing_by_traces(const LieTable& l) {
  const std::size_t n = l.dim();
  DenseMatrix k(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      DenseMatrix prod = ad(l, a).matrix * ad(l, b).matrix;
      for (std::size_t i = 0; i < n; ++i) k(a, b) += prod(i, i);
    }
  return k;
}

void expect_witness_valid(const LieTable& l, const SimplicityVerdict& v) {
  ASSERT_TRUE(v.witness);
  EXPECT_GT(v.witness->dim(), 0u);
  EXPECT_LT(v.witness->dim(), l.dim());
  for (const auto& w : v.witness->vectors)
    for (std::size_t i = 0; i < l.dim(); ++i) EXPECT_TRUE(contains_vector(*v.witness, l.bracket(w, unit_vector(l.dim(), i))));
}

std::vector<LieTable> lie_fixtures() {
  return {so_alpha(3, ones(3)), so_alpha(4, {1, 2, 3, 4}), assoc_lie(2), skew_lie(4),
          from_operators(der(spin_factor(ones(3)))), from_operators(der(nilpotent_fixture())), so_alpha(2, {1, 5})};
}

}  // namespace

TEST(LieTable, ValidationReportsIndices) {
  StructureTable t(2);
  t.set(0, 1, 0, 1);
  try {
    LieTable l(t);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind, ViolationKind::NotAntisymmetric);
    EXPECT_EQ(e.indices, (std::vector<std::size_t>{0, 1}));
  }
  // antisymmetric but not Jacobi: [e1,e2] = e3, [e2,e3] = e3, [e1,e3] = e1
  StructureTable u(3);
  auto set_pair = [&](std::size_t i, std::size_t j, std::size_t k) {
    u.set(i, j, k, 1);
    u.set(j, i, k, -1);
  };
  set_pair(0, 1, 2);
  set_pair(1, 2, 2);
  set_pair(0, 2, 0);
  try {
    LieTable l(u);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind, ViolationKind::NotJacobi);
    EXPECT_EQ(e.indices.size(), 3u);
  }
}

TEST(LieTable, AntisymmetryAndJacobiOnConstructed) {
  for (const auto& l : lie_fixtures()) {
    EXPECT_FALSE(first_antisymmetry_violation(l.table()));
    EXPECT_FALSE(first_jacobi_violation(l.table()));
    oracle::Constants k(l.table());
    oracle::Sampler s(61);
    for (int trial = 0; trial < 20; ++trial) {
      auto x = s.vector(l.dim()), y = s.vector(l.dim()), z = s.vector(l.dim());
      auto jac = oracle::add(oracle::add(k.mul(x, k.mul(y, z)), k.mul(y, k.mul(z, x))), k.mul(z, k.mul(x, y)));
      EXPECT_TRUE(oracle::zero(jac));
      EXPECT_EQ(k.mul(x, y), oracle::sub(oracle::Vec(l.dim(), 0), k.mul(y, x)));
    }
  }
}

TEST(FromOperators, SpinDerivations) {
  auto d = der(spin_factor(ones(3)));
  auto l = from_operators(d);
  EXPECT_EQ(l.dim(), 3u);
  ASSERT_TRUE(l.realization());
  EXPECT_EQ(*l.realization(), d);
  // bracket of basis operators matches the table
  auto ops = d.elements();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      DenseMatrix expected(4, 4);
      auto coords = basis_product(l.table(), i, j);
      for (std::size_t k = 0; k < 3; ++k) expected = expected + coords[k] * ops[k].matrix;
      EXPECT_EQ(operator_commutator(ops[i], ops[j]).matrix, expected);
    }
}

TEST(FromOperators, NilpotentDerivations) {
  auto l = from_operators(der(nilpotent_fixture()));
  EXPECT_EQ(l.dim(), 2u);
  EXPECT_EQ(l.table().basis_names(), (std::vector<std::string>{"D1", "D2"}));
}

TEST(FromOperators, NotClosed) {
  // span{E12, E21} is not closed: [E12, E21] = E11 - E22
  DenseMatrix e12(2, 2), e21(2, 2);
  e12(0, 1) = 1;
  e21(1, 0) = 1;
  auto s = operator_span(2, {{e12}, {e21}});
  try {
    from_operators(s);
    FAIL();
  } catch (const NotClosed& e) {
    EXPECT_EQ(e.i, 0u);
    EXPECT_EQ(e.j, 1u);
  }
  EXPECT_EQ(from_operators(operator_span(2, {{e12}})).dim(), 1u);
}

TEST(LieCenter, Examples) {
  EXPECT_EQ(lie_center(assoc_lie(2)).dim(), 1u);
  EXPECT_EQ(lie_center(assoc_lie(3)).dim(), 1u);
  EXPECT_EQ(lie_center(so_alpha(3, ones(3))).dim(), 0u);
  EXPECT_EQ(lie_center(so_alpha(2, {2, 3})).dim(), 1u);
  Vector identity = zero_vector(4);
  identity[0] = identity[3] = 1;
  EXPECT_TRUE(contains_vector(lie_center(assoc_lie(2)), identity));
}

TEST(Derived, Perfect) {
  EXPECT_EQ(derived(so_alpha(3, ones(3))), full_space(3));
  EXPECT_EQ(derived(assoc_lie(2)).dim(), 3u);
  EXPECT_EQ(derived(so_alpha(2, ones(2))).dim(), 0u);
}

TEST(Killing, So3IsMinusTwoIdentity) {
  auto l = so_alpha(3, ones(3));
  EXPECT_EQ(killing(l), Scalar(-2) * DenseMatrix::identity(3));
}

TEST(Killing, MatchesTracesSymmetricAndInvariant) {
  for (const auto& l : lie_fixtures()) {
    auto k = killing(l);
    EXPECT_EQ(k, killing_by_traces(l));
    EXPECT_EQ(k, k.transpose());
    const std::size_t n = l.dim();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          // kappa([x,y], z) = kappa(x, [y,z])
          Vector xy = basis_product(l.table(), x, y), yz = basis_product(l.table(), y, z);
          Scalar lhs = 0, rhs = 0;
          for (std::size_t i = 0; i < n; ++i) {
            lhs += xy[i] * k(i, z);
            rhs += k(x, i) * yz[i];
          }
          EXPECT_EQ(lhs, rhs);
        }
  }
}

TEST(Centroid, Dimensions) {
  EXPECT_EQ(centroid(so_alpha(3, ones(3))).dim(), 1u);
  EXPECT_EQ(centroid(so_alpha(4, ones(4))).dim(), 2u);
  EXPECT_EQ(centroid(so_alpha(5, ones(5))).dim(), 1u);
}

TEST(Centroid, CommutesWithEveryAd) {
  for (const auto& l : {so_alpha(4, ones(4)), skew_lie(4), lie_direct_sum(so_alpha(3, ones(3)), so_alpha(3, {1, 2, 3}))}) {
    auto c = centroid(l);
    for (const auto& phi : c.elements())
      for (std::size_t x = 0; x < l.dim(); ++x) EXPECT_EQ(phi.matrix * ad(l, x).matrix, ad(l, x).matrix * phi.matrix);
    EXPECT_EQ(c, centroid(l, {Strategy::modular, 64}));
  }
}

TEST(IdealGenerated, Examples) {
  auto l = so_alpha(3, ones(3));
  EXPECT_EQ(ideal_generated(l, span_of(3, {unit_vector(3, 0)})), full_space(3));
  EXPECT_EQ(ideal_generated(l, zero_space(3)).dim(), 0u);
  auto so4 = so_alpha(4, ones(4));
  auto ideal = span_of(6, so4_ideal_generators(ones(4)));
  EXPECT_EQ(ideal_generated(so4, ideal), ideal);
}

TEST(Simplicity, SoAlphaWithUnitParameters) {
  for (std::size_t n : {3u, 5u, 6u}) {
    auto v = simplicity(so_alpha(n, ones(n)));
    EXPECT_EQ(v.status, SimplicityStatus::Simple) << n;
    EXPECT_TRUE(v.certificate.killing_nondegenerate);
    EXPECT_EQ(v.certificate.centroid_dim, 1u);
    EXPECT_FALSE(v.witness);
  }
  auto l = so_alpha(4, ones(4));
  auto v = simplicity(l);
  EXPECT_EQ(v.status, SimplicityStatus::NotSimple);
  expect_witness_valid(l, v);
  EXPECT_EQ(*v.witness, span_of(6, so4_ideal_generators(ones(4))));
  EXPECT_EQ(v.certificate.centroid_dim, 2u);
}

TEST(Simplicity, SoAlphaWithOtherParameters) {
  EXPECT_EQ(simplicity(so_alpha(3, {1, -2, make_scalar(1, 3)})).status, SimplicityStatus::Simple);
  auto l = so_alpha(4, {1, 2, 2, 1});
  auto v = simplicity(l);
  EXPECT_EQ(v.status, SimplicityStatus::NotSimple);
  expect_witness_valid(l, v);
}

TEST(Simplicity, IrrationalCentroidIsInconclusive) {
  // a4 a1 / (a2 a3) = 2/3, so the centroid is a quadratic field with no rational idempotent
  auto v = simplicity(so_alpha(4, {1, 2, 3, 4}));
  EXPECT_EQ(v.status, SimplicityStatus::Inconclusive);
  EXPECT_TRUE(v.certificate.killing_nondegenerate);
  EXPECT_EQ(v.certificate.centroid_dim, 2u);
  EXPECT_FALSE(v.witness);
}

TEST(Simplicity, DegenerateCases) {
  auto one = so_alpha(2, ones(2));
  auto v1 = simplicity(one);
  EXPECT_EQ(v1.status, SimplicityStatus::NotSimple);
  EXPECT_FALSE(v1.witness);
  auto abelian = LieTable(StructureTable(3));
  auto v2 = simplicity(abelian);
  EXPECT_EQ(v2.status, SimplicityStatus::NotSimple);
  expect_witness_valid(abelian, v2);
  auto gl2 = assoc_lie(2);
  auto v3 = simplicity(gl2);
  EXPECT_EQ(v3.status, SimplicityStatus::NotSimple);
  expect_witness_valid(gl2, v3);
  EXPECT_FALSE(v3.certificate.killing_nondegenerate);
}

TEST(Simplicity, DirectSumSplits) {
  auto l = lie_direct_sum(so_alpha(3, ones(3)), so_alpha(5, ones(5)));
  auto v = simplicity(l);
  EXPECT_EQ(v.status, SimplicityStatus::NotSimple);
  expect_witness_valid(l, v);
  EXPECT_EQ(v.witness->dim(), 3u);
}

TEST(Simplicity, WitnessIsDeterministic) {
  auto l = so_alpha(4, ones(4));
  EXPECT_EQ(simplicity(l).witness, simplicity(l).witness);
}

TEST(QuotientByCenter, Examples) {
  auto q2 = quotient_by_center(assoc_lie(2));
  EXPECT_EQ(q2.dim(), 3u);
  EXPECT_EQ(simplicity(q2).status, SimplicityStatus::Simple);
  auto skew4 = skew_lie(4);
  auto q4 = quotient_by_center(skew4);
  EXPECT_EQ(q4.table(), skew4.table());
  EXPECT_EQ(simplicity(q4).status, SimplicityStatus::NotSimple);
  EXPECT_EQ(quotient_by_center(LieTable(StructureTable(2))).dim(), 0u);
  EXPECT_EQ(simplicity(quotient_by_center(assoc_lie(3))).status, SimplicityStatus::Simple);
}

TEST(AdDerTDer, SpinDerivationAlgebra) {
  auto l = from_operators(der(spin_factor(ones(3))));
  auto a = ad_span(l);
  EXPECT_EQ(a.dim(), 3u);
  EXPECT_EQ(a, lie_der(l));
  EXPECT_EQ(a, lie_tder(l));
}

TEST(AdDerTDer, Abelian) {
  LieTable l(StructureTable(2));
  EXPECT_EQ(lie_der(l).dim(), 4u);
  EXPECT_EQ(ad_span(l).dim(), 0u);
}

TEST(AdDerTDer, ChainOfContainments) {
  for (const auto& l : lie_fixtures()) {
    auto a = ad_span(l), d = lie_der(l), t = lie_tder(l);
    EXPECT_TRUE(is_subspace(a, d));
    EXPECT_TRUE(is_subspace(d, t));
    EXPECT_EQ(d, lie_der(l, {Strategy::modular, 64}));
    EXPECT_EQ(t, lie_tder(l, {Strategy::modular, 64}));
    if (derived(l) == full_space(l.dim()) && lie_center(l).dim() == 0) {
      EXPECT_EQ(t, d);
    }
  }
}

TEST(AdDerTDer, DirectSumOfSo3) {
  auto so3 = so_alpha(3, ones(3));
  auto sum = lie_direct_sum(so3, so3);
  EXPECT_EQ(lie_tder(sum).dim(), 6u);
  EXPECT_EQ(lie_tder(sum), block_embed(lie_tder(so3), lie_tder(so3)));
}

TEST(LieDirectSum, CentersAndDerivations) {
  auto a = assoc_lie(2), b = so_alpha(3, ones(3));
  auto sum = lie_direct_sum(a, b);
  EXPECT_EQ(sum.dim(), 7u);
  auto expected = subspace_ops(embed_summand(lie_center(a), 0, 7), embed_summand(lie_center(b), 4, 7)).sum;
  EXPECT_EQ(lie_center(sum), expected);
  auto c = so_alpha(4, {1, 2, 3, 4});
  auto centerless = lie_direct_sum(b, c);
  EXPECT_EQ(lie_der(centerless), block_embed(lie_der(b), lie_der(c)));
  EXPECT_EQ(ad_span(centerless), block_embed(ad_span(b), ad_span(c)));
}
