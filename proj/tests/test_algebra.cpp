#include <gtest/gtest.h>

#include "centext/algebra.hpp"
#include "centext/catalog.hpp"
#include "centext/errors.hpp"
#include "test_support.hpp"

using namespace centext;
using centext::testing::mat;
using centext::testing::vec;

namespace {

Field Q = Field::rationals();

}  // namespace

TEST(Bracket, TowerStructureConstants) {
  auto t = catalog::nonassociative_tower();
  EXPECT_EQ(bracket(t.b, t.b.basis_vector(1), t.b.basis_vector(1)), t.b.basis_vector(0));
  EXPECT_EQ(bracket(t.b, vec(Q, {1, 2, 3}), t.b.zero_vector()), t.b.zero_vector());
  // [b3, b2+b3] = [b3,b2] + [b3,b3] = b3 + b2
  EXPECT_EQ(bracket(t.b, t.b.basis_vector(2), vec(Q, {0, 1, 1})), vec(Q, {0, 1, 1}));
}

TEST(Morphism, IdentityAndTowerMaps) {
  auto t = catalog::nonassociative_tower();
  EXPECT_TRUE(is_morphism(LinearMap::identity(t.b)));
  EXPECT_TRUE(is_morphism(LinearMap(t.b, t.a, t.f.matrix())));
  EXPECT_TRUE(is_morphism(LinearMap(t.c, t.b, t.g.matrix())));
  // b2 |-> a2, b3 |-> a1: [b3,b2] = b3 |-> a1 but [a1,a2] = 0.
  LinearMap swapped(t.b, t.a, mat(Q, {{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_FALSE(is_morphism(swapped));
  EXPECT_THROW(swapped.certified(), PreconditionError);
}

TEST(Morphism, ShapeMismatchRejected) {
  auto t = catalog::nonassociative_tower();
  EXPECT_THROW(LinearMap(t.b, t.a, mat(Q, {{1, 0}})), std::invalid_argument);
  EXPECT_THROW(compose(t.f, t.f), std::invalid_argument);
}

TEST(IdealGenerated, Cases) {
  auto t = catalog::nonassociative_tower();
  EXPECT_TRUE(ideal_generated(t.c, Subspace::zero(4)).subspace.empty());
  EXPECT_TRUE(ideal_generated(t.c, Subspace::whole(4)).subspace.is_whole());
  // [c3,c2] = c1 and c1 brackets to zero.
  IdealWitness i = ideal_generated(t.c, Subspace::span(4, mat(Q, {{0, 1, 0, 0}})));
  EXPECT_TRUE(i.closure_certified);
  EXPECT_EQ(i.subspace, Subspace::span(4, mat(Q, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
}

TEST(QuotientAlgebra, ByCentreOfBRecoversA) {
  auto t = catalog::nonassociative_tower();
  IdealWitness k = as_ideal(t.b, Subspace::span(3, mat(Q, {{1, 0, 0}})));
  QuotientAlgebra qa = quotient_algebra(t.b, k);
  ASSERT_EQ(qa.algebra.dim(), 2);
  EXPECT_EQ(qa.algebra.labels(), (std::vector<std::string>{"b2", "b3"}));
  // b2 |-> a1, b3 |-> a2 identifies the quotient with A.
  EXPECT_TRUE(qa.algebra.same_structure(t.a));
  EXPECT_TRUE(is_surjective(qa.proj));
  EXPECT_EQ(kernel<Scalar>(qa.proj.matrix()), k.subspace);
}

TEST(QuotientAlgebra, TrivialCases) {
  auto t = catalog::nonassociative_tower();
  auto same = quotient_algebra(t.c, as_ideal(t.c, Subspace::zero(4)));
  EXPECT_TRUE(same.algebra.same_structure(t.c));
  auto none = quotient_algebra(t.c, as_ideal(t.c, Subspace::whole(4)));
  EXPECT_EQ(none.algebra.dim(), 0);
  EXPECT_THROW(quotient_algebra(t.c, IdealWitness{Subspace::zero(4), false}), PreconditionError);
  EXPECT_THROW(as_ideal(t.c, Subspace::span(4, mat(Q, {{0, 1, 0, 0}}))), PreconditionError);
}

TEST(FibreProduct, IdentityWithIdentityIsDiagonal) {
  Algebra s = catalog::sl2();
  auto fp = fibre_product(LinearMap::identity(s), LinearMap::identity(s));
  EXPECT_EQ(fp.algebra.dim(), 3);
  EXPECT_TRUE(is_isomorphism(fp.p1));
  EXPECT_EQ(fp.p1.matrix(), fp.p2.matrix());
}

TEST(FibreProduct, KernelPairs) {
  auto t = catalog::nonassociative_tower();
  auto to_zero = kernel_pair(LinearMap::zero(t.b, Algebra::zero(Q)));
  EXPECT_EQ(to_zero.algebra.dim(), 6);

  auto kp = kernel_pair(t.f);
  EXPECT_EQ(kp.algebra.dim(), 4);  // 2*3 - 2
  EXPECT_EQ(Matrix(kp.p1.matrix() * t.f.matrix()), Matrix(kp.p2.matrix() * t.f.matrix()));
  ASSERT_TRUE(kp.diagonal.has_value());
  EXPECT_EQ(compose(kp.p1, *kp.diagonal).matrix(), identity_matrix(3, Q));
  EXPECT_EQ(compose(kp.p2, *kp.diagonal).matrix(), identity_matrix(3, Q));
}

TEST(FibreProduct, CodomainMismatch) {
  auto t = catalog::nonassociative_tower();
  EXPECT_THROW(fibre_product(t.f, t.g), PreconditionError);
}

TEST(Centre, Cases) {
  auto t = catalog::nonassociative_tower();
  EXPECT_TRUE(centre(Algebra::abelian(Q, 3)).is_whole());
  EXPECT_EQ(centre(t.b), Subspace::span(3, mat(Q, {{1, 0, 0}})));
  EXPECT_EQ(centre(t.c), Subspace::span(4, mat(Q, {{1, 0, 0, 0}})));
  EXPECT_TRUE(centre(catalog::sl2()).empty());
  EXPECT_EQ(centre(catalog::heisenberg()).dim(), 1);
}

TEST(DirectProduct, ProjectionsAndInjections) {
  Algebra s = catalog::sl2();
  Algebra h = catalog::heisenberg();
  auto p = direct_product(s, h);
  EXPECT_EQ(p.algebra.dim(), 6);
  EXPECT_EQ(compose(p.p1, p.i1).matrix(), identity_matrix(3, Q));
  EXPECT_TRUE(is_zero_matrix<Scalar>(compose(p.p2, p.i1).matrix()));
  EXPECT_EQ(centre(p.algebra).dim(), 1);
}

TEST(Composition, AssociativeAndCertified) {
  auto t = catalog::nonassociative_tower();
  LinearMap fg = compose(t.f, t.g);
  EXPECT_TRUE(fg.morphism_certified());
  LinearMap id = LinearMap::identity(t.c);
  EXPECT_EQ(compose(compose(t.f, t.g), id).matrix(), compose(t.f, compose(t.g, id)).matrix());
}

TEST(ChangeBasis, GivesIsomorphicCopy) {
  Algebra s = catalog::sl2(Field::prime(5));
  Field f5 = Field::prime(5);
  auto bc = change_basis(s, mat(f5, {{1, 1, 0}, {0, 1, 2}, {3, 0, 1}}));
  EXPECT_TRUE(is_isomorphism(bc.to_old));
  EXPECT_FALSE(bc.algebra.same_structure(s));
}

TEST(Subalgebra, LabelsAndInclusion) {
  auto t = catalog::nonassociative_tower();
  Subspace s = subalgebra_generated(t.c, Subspace::span(4, mat(Q, {{0, 0, 1, 0}})));
  // c3 generates c2 = [c3,c3] and c1 = [c3,c2].
  EXPECT_EQ(s.dim(), 3);
  auto view = subalgebra(t.c, s);
  EXPECT_EQ(view.algebra.labels(), (std::vector<std::string>{"c1", "c2", "c3"}));
  EXPECT_TRUE(view.inclusion.morphism_certified());
  EXPECT_THROW(subalgebra(t.c, Subspace::span(4, mat(Q, {{0, 0, 1, 0}}))), PreconditionError);
}
