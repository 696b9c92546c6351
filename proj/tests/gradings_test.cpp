#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "puniv/gradings.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace puniv;

namespace {

std::vector<Scalar> vec(const Field& f, const std::vector<int>& entries) {
  std::vector<Scalar> out;
  out.reserve(entries.size());
  for (int e : entries) out.push_back(Scalar::from_int(f, e));
  return out;
}

Grading z2_grading(const Field& f, int dim, const std::vector<std::vector<int>>& part0,
                   const std::vector<std::vector<int>>& part1) {
  std::vector<std::vector<std::vector<Scalar>>> spans(2);
  for (const auto& r : part0) spans[0].push_back(vec(f, r));
  for (const auto& r : part1) spans[1].push_back(vec(f, r));
  return make_grading(FiniteAbelianGroup::parse("Z2"), f, dim, std::move(spans));
}

GroupAlgebraElement mono(const GroupAlgebraRing& kg, std::uint32_t g, int c) {
  return GroupAlgebraElement::monomial(kg.group, kg.field, {g},
                                       Scalar::from_int(kg.field, c));
}

bool has_law(const std::vector<LawFailure>& report, const std::string& law) {
  for (const LawFailure& f : report)
    if (f.law == law) return true;
  return false;
}

}  // namespace

TEST_CASE("make_grading canonicalizes the spanning sets") {
  Field q = Field::rationals();
  // the same pair of subspaces through two different spanning sets
  Grading a = z2_grading(q, 3, {{2, 2, 0}, {0, 3, 0}}, {{0, 0, 5}});
  Grading b = z2_grading(q, 3, {{1, 0, 0}, {1, 1, 0}}, {{0, 0, 1}});
  CHECK(a == b);
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(a.components[0].size() == 2);
  CHECK(a.components[0][0] == vec(q, {1, 0, 0}));
  CHECK(a.components[0][1] == vec(q, {0, 1, 0}));

  // one component list per group element, rows of the right length
  CHECK_THROWS_AS(make_grading(FiniteAbelianGroup::parse("Z2"), q, 3,
                               {{vec(q, {1, 0, 0})}}),
                  input_error);
  CHECK_THROWS_AS(z2_grading(q, 3, {{1, 0}}, {{0, 0, 1}}), input_error);
}

TEST_CASE("verify_grading separates gradings from mere decompositions") {
  Field q = Field::rationals();
  PoissonStructure p = fixtures::h3(q);

  CHECK(verify_grading(p, z2_grading(q, 3, {{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}})));
  // bracket lands in the wrong component: [e1, e3] = e3
  CHECK_FALSE(verify_grading(p, z2_grading(q, 3, {{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}})));
  // product lands in the wrong component: e1 e1 = e2
  CHECK_FALSE(verify_grading(p, z2_grading(q, 3, {{1, 0, 0}}, {{0, 1, 0}, {0, 0, 1}})));
  // the trivial grading always works
  CHECK(verify_grading(p, z2_grading(q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {})));

  // not a direct-sum decomposition at all
  CHECK_THROWS_AS(verify_grading(p, z2_grading(q, 3, {{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}})),
                  input_error);
  // mismatched field
  CHECK_THROWS_AS(
      verify_grading(p, z2_grading(Field::prime(3), 3, {{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}})),
      input_error);
}

TEST_CASE("projector families and gradings translate into each other") {
  Field q = Field::rationals();
  PoissonStructure p = fixtures::h3(q);
  UniversalPresentation u = universal_algebra(p, p);
  FiniteAbelianGroup G = FiniteAbelianGroup::parse("Z2");
  GroupAlgebraRing kg(G, q);

  // theta = diag(1,1,0)*(0) + diag(0,0,1)*(1)
  Matrix<GroupAlgebraRing> th(kg, 3, 3);
  th.at(0, 0) = mono(kg, 0, 1);
  th.at(1, 1) = mono(kg, 0, 1);
  th.at(2, 2) = mono(kg, 1, 1);
  GroupAlgebraBialgebraMap m{G, th};

  ScalarRing ring(q);
  ScalarMatrix m0(ring, 3, 3), m1(ring, 3, 3);
  m0.at(0, 0) = m0.at(1, 1) = Scalar::one(q);
  m1.at(2, 2) = Scalar::one(q);
  CHECK(m.component({0}) == m0);
  CHECK(m.component({1}) == m1);

  CHECK(verify_bialgebra_map(u, m).empty());
  Grading g = grading_from_theta(u, m);
  Grading expected = z2_grading(q, 3, {{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}});
  CHECK(g == expected);

  // and back again: projections onto the components
  GroupAlgebraBialgebraMap back = theta_from_grading(u, g);
  CHECK(back.theta == th);

  // gradass: M_rho acts as the identity on P_rho and kills the other part
  for (std::size_t rho = 0; rho < 2; ++rho) {
    ScalarMatrix proj = back.component(G.elements()[rho]);
    for (std::size_t sigma = 0; sigma < 2; ++sigma)
      for (const auto& x : g.components[sigma]) {
        for (int s = 0; s < 3; ++s) {
          Scalar img = Scalar::zero(q);
          for (int i = 0; i < 3; ++i) img = img + proj.at(s, i) * x[i];
          CHECK(img == (rho == sigma ? x[s] : Scalar::zero(q)));
        }
      }
  }
}

TEST_CASE("defective projector families are reported by law") {
  Field q = Field::rationals();
  PoissonStructure p = fixtures::h3(q);
  UniversalPresentation u = universal_algebra(p, p);
  FiniteAbelianGroup G = FiniteAbelianGroup::parse("Z2");
  GroupAlgebraRing kg(G, q);

  // both coefficient matrices the identity: wrong sum, not orthogonal
  Matrix<GroupAlgebraRing> th1(kg, 3, 3);
  for (int i = 0; i < 3; ++i) th1.at(i, i) = mono(kg, 0, 1) + mono(kg, 1, 1);
  auto r1 = verify_bialgebra_map(u, GroupAlgebraBialgebraMap{G, th1});
  CHECK(has_law(r1, "counit"));
  CHECK(has_law(r1, "comultiplication"));

  // orthogonal idempotents that do not kill x22 - x11^2
  Matrix<GroupAlgebraRing> th2(kg, 3, 3);
  th2.at(0, 0) = mono(kg, 0, 1);
  th2.at(1, 1) = mono(kg, 1, 1);
  th2.at(2, 2) = mono(kg, 1, 1);
  auto r2 = verify_bialgebra_map(u, GroupAlgebraBialgebraMap{G, th2});
  CHECK(r2.size() == 1);
  CHECK(has_law(r2, "relation"));
  CHECK_THROWS_AS(grading_from_theta(u, GroupAlgebraBialgebraMap{G, th2}), input_error);

  // shape and squareness guards
  Matrix<GroupAlgebraRing> small(kg, 2, 2);
  CHECK_THROWS_AS(verify_bialgebra_map(u, GroupAlgebraBialgebraMap{G, small}), input_error);
  UniversalPresentation rect =
      universal_algebra(fixtures::dual_numbers(q), fixtures::aff2(q));
  Matrix<GroupAlgebraRing> th3(kg, 2, 2);
  CHECK_THROWS_AS(verify_bialgebra_map(rect, GroupAlgebraBialgebraMap{G, th3}), input_error);

  // a grading that fails verify_grading cannot be converted
  CHECK_THROWS_AS(
      theta_from_grading(u, z2_grading(q, 3, {{0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}})),
      input_error);
}

TEST_CASE("all Z/2-gradings of the 3-dimensional example over F_3") {
  Field f3 = Field::prime(3);
  PoissonStructure p = fixtures::h3(f3);
  FiniteAbelianGroup G = FiniteAbelianGroup::parse("Z2");
  std::vector<Grading> found = enumerate_gradings(p, G);
  REQUIRE(found.size() == 4);

  std::set<std::string> keys;
  for (const Grading& g : found) {
    CHECK(verify_grading(p, g));
    keys.insert(g.canonical_key());
  }
  std::set<std::string> expected{
      z2_grading(f3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {}).canonical_key(),
      z2_grading(f3, 3, {{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}}).canonical_key(),
      z2_grading(f3, 3, {{1, 0, 1}, {0, 1, 0}}, {{0, 0, 1}}).canonical_key(),
      z2_grading(f3, 3, {{1, 0, 2}, {0, 1, 0}}, {{0, 0, 1}}).canonical_key(),
  };
  CHECK(keys == expected);

  // round trip through the projector family
  UniversalPresentation u = universal_algebra(p, p);
  for (const Grading& g : found)
    CHECK(grading_from_theta(u, theta_from_grading(u, g)) == g);

  // the free rank-1 case has exactly the two one-sided gradings
  CHECK(enumerate_gradings(fixtures::abelian(Field::prime(2), 1), G).size() == 2);

  CHECK_THROWS_AS(enumerate_gradings(fixtures::h3(Field::rationals()), G), input_error);
  CHECK_THROWS_AS(enumerate_gradings(p, G, 4), guard_error);
}

TEST_CASE("classification: one trivial orbit and one orbit of size three") {
  Field f3 = Field::prime(3);
  PoissonStructure p = fixtures::h3(f3);
  FiniteAbelianGroup G = FiniteAbelianGroup::parse("Z2");
  GradingClassification cls = classify_gradings(p, G);
  REQUIRE(cls.gradings.size() == 4);
  REQUIRE(cls.orbits.size() == 2);

  std::multiset<std::size_t> sizes;
  for (const GradingOrbit& o : cls.orbits) {
    sizes.insert(o.members.size());
    CHECK(o.representative == o.members.front());
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 3});

  // the fixed point of the action is the trivial grading
  for (const GradingOrbit& o : cls.orbits)
    if (o.members.size() == 1)
      CHECK(cls.gradings[o.representative].components[0].size() == 3);

  // the automorphism action stays inside the enumerated list
  std::set<std::string> keys;
  for (const Grading& g : cls.gradings) keys.insert(g.canonical_key());
  AutomorphismGroup aut = automorphism_group(p);
  for (const Grading& g : cls.gradings)
    for (const ScalarMatrix& w : aut.elements)
      CHECK(keys.count(transform_grading(g, w).canonical_key()) == 1);
  CHECK(transform_grading(cls.gradings[0],
                          ScalarMatrix::identity(ScalarRing(f3), 3)) == cls.gradings[0]);

  // with no Poisson structure every decomposition survives, and GL_1(F_2)
  // cannot merge the two one-sided gradings
  GradingClassification free1 = classify_gradings(fixtures::abelian(Field::prime(2), 1), G);
  CHECK(free1.gradings.size() == 2);
  CHECK(free1.orbits.size() == 2);
}

TEST_CASE("the subspace census behind the search") {
  CHECK(all_subspaces(Field::prime(2), 2).size() == 5);
  CHECK(all_subspaces(Field::prime(3), 2).size() == 6);
  CHECK(all_subspaces(Field::prime(2), 3).size() == 16);
  // every entry is already a canonical row basis
  Field f3 = Field::prime(3);
  for (const auto& space : all_subspaces(f3, 2)) {
    if (space.empty()) continue;
    ScalarMatrix m(ScalarRing(f3), space.size(), 2);
    for (std::size_t i = 0; i < space.size(); ++i)
      for (int j = 0; j < 2; ++j) m.at(i, j) = space[i][j];
    CHECK(row_space_basis(m) == space);
  }
  CHECK_THROWS_AS(all_subspaces(Field::rationals(), 2), input_error);
}
