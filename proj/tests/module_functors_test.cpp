#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <vector>

#include "puniv/module_functors.hpp"
#include "support/fixtures.hpp"
#include "support/random_structures.hpp"

using namespace puniv;

namespace {

std::shared_ptr<const UniversalPresentation> square(const PoissonStructure& p) {
  return std::make_shared<UniversalPresentation>(universal_algebra(p, p));
}

PoissonModuleStructure regular_module(const PoissonStructure& p) {
  PoissonModuleStructure m(p, p.dim());
  for (const auto& [k, c] : p.tau_map()) m.set_assoc(k[0], k[1], k[2], c);
  for (const auto& [k, c] : p.mu_map()) m.set_lie(k[0], k[1], k[2], c);
  return m;
}

std::vector<ScalarMatrix> zero_actions(const UniversalPresentation& alg, int dim) {
  return std::vector<ScalarMatrix>(
      alg.nvars(), ScalarMatrix(ScalarRing(alg.ctx()->field), dim, dim));
}

/// x(s,i) |-> [delta_si], the counit specialized to a one-dimensional module.
AModuleStructure counit_module(const std::shared_ptr<const UniversalPresentation>& alg) {
  std::vector<ScalarMatrix> acts = zero_actions(*alg, 1);
  const Field& f = alg->ctx()->field;
  int n = alg->P().dim();
  int m = alg->Q().dim();
  for (int s = 0; s < n && s < m; ++s)
    acts[alg->var_index(s, s)].at(0, 0) = Scalar::one(f);
  return AModuleStructure(alg, 1, std::move(acts));
}

}  // namespace

TEST_CASE("action matrices are validated on construction") {
  Field q = Field::rationals();
  auto alg = square(fixtures::h3(q));
  CHECK_THROWS_AS(AModuleStructure(nullptr, 1, {}), input_error);
  CHECK_THROWS_AS(AModuleStructure(alg, 0, zero_actions(*alg, 1)), input_error);
  auto short_list = zero_actions(*alg, 1);
  short_list.pop_back();
  CHECK_THROWS_AS(AModuleStructure(alg, 1, short_list), input_error);
  auto bad_shape = zero_actions(*alg, 1);
  bad_shape[3] = ScalarMatrix(ScalarRing(q), 2, 2);
  CHECK_THROWS_AS(AModuleStructure(alg, 1, bad_shape), input_error);
  auto bad_field = zero_actions(*alg, 1);
  bad_field[0] = ScalarMatrix(ScalarRing(Field::prime(3)), 1, 1);
  CHECK_THROWS_AS(AModuleStructure(alg, 1, bad_field), input_error);
}

TEST_CASE("the counit action is a module; a wrong diagonal is pinpointed") {
  Field q = Field::rationals();
  auto alg = square(fixtures::h3(q));

  AModuleStructure eps = counit_module(alg);
  CHECK(eps.verify().empty());
  CHECK(eps.action(1, 1).at(0, 0).is_one());
  CHECK(eps.action(1, 0).at(0, 0).is_zero());
  CHECK(eps.action_coeff(2, 2, 0, 0).is_one());

  // x11 |-> [1] with everything else zero violates exactly x22 = x11^2
  auto acts = zero_actions(*alg, 1);
  acts[alg->var_index(0, 0)].at(0, 0) = Scalar::one(q);
  AModuleStructure bad(alg, 1, std::move(acts));
  auto report = bad.verify();
  REQUIRE(report.size() == 1);
  CHECK(report[0].law == "relation");
  CHECK(report[0].where == "product(2,1,1)");
}

TEST_CASE("non-commuting images are refused with the generator names") {
  Field q = Field::rationals();
  auto alg = square(fixtures::abelian(q, 2));
  REQUIRE(alg->relations().empty());
  auto acts = zero_actions(*alg, 2);
  acts[alg->var_index(0, 0)].at(0, 1) = Scalar::one(q);  // x11: shift up
  acts[alg->var_index(0, 1)].at(1, 0) = Scalar::one(q);  // x12: shift down
  AModuleStructure v(alg, 2, std::move(acts));
  auto report = v.verify();
  REQUIRE(report.size() == 1);
  CHECK(report[0].law == "commutation");
  CHECK(report[0].where == "x11,x12");
}

TEST_CASE("tensoring with the counit module returns the original constants") {
  Field q = Field::rationals();
  PoissonStructure p = fixtures::h3(q);
  auto alg = square(p);
  PoissonModuleStructure u = regular_module(p);
  PoissonModuleStructure t = tensor_module(u, counit_module(alg));
  CHECK(t.dim() == 3);
  CHECK(t.base() == p);
  CHECK(t.assoc_map() == u.assoc_map());
  CHECK(t.lie_map() == u.lie_map());
  CHECK(verify_poisson_module(t).empty());

  // a trivial Poisson module stays trivial no matter the A-module side
  PoissonModuleStructure zero(p, 2);
  PoissonModuleStructure tz = tensor_module(zero, counit_module(alg));
  CHECK(tz.dim() == 2);
  CHECK(tz.assoc_map().empty());
  CHECK(tz.lie_map().empty());

  // U must be a module over the P that coacts
  CHECK_THROWS_AS(tensor_module(regular_module(fixtures::dual_numbers(q)), counit_module(alg)),
                  input_error);
}

TEST_CASE("random tensor modules satisfy the module axioms") {
  randgen::Rng rng(271828);
  Field f3 = Field::prime(3);
  for (int round = 0; round < 6; ++round) {
    PoissonStructure p = randgen::random_poisson(rng, f3, 2);
    auto alg = square(p);
    AModuleStructure v = randgen::random_amodule(rng, alg, 2);
    REQUIRE(v.verify().empty());
    PoissonModuleStructure u = randgen::random_module(rng, p, 2);
    PoissonModuleStructure t = tensor_module(u, v);
    CHECK(t.dim() == u.dim() * v.dim());
    CHECK(verify_poisson_module(t).empty());
  }
}

TEST_CASE("the universal U-module presentation in the smallest case") {
  Field q = Field::rationals();
  PoissonStructure p = fixtures::split_idempotents(q, 1);  // e1 e1 = e1
  UniversalPresentation alg = universal_algebra(p, p);
  PoissonModuleStructure w = regular_module(p);
  ModulePresentation pres = emit_U_presentation(w, w, alg);

  CHECK(pres.flavour == 'U');
  CHECK(pres.gen_rows == 1);
  CHECK(pres.gen_cols == 1);
  CHECK(pres.gen_names == std::vector<std::string>{"y11"});
  REQUIRE(pres.relations.size() == 1);
  const ModuleRelationRow& row = pres.relations[0];
  CHECK(row.kind == RelationKind::product);
  CHECK((row.i1 == 0 && row.i2 == 0 && row.i3 == 0));
  REQUIRE(row.terms.size() == 1);
  CHECK(row.terms[0].op == ModuleRelationTerm::Op::none);
  // the two contributions y11 and -x11*y11 merge into one A-coefficient
  Polynomial expect = Polynomial::constant(alg.ctx(), Scalar::one(q)) -
                      Polynomial::variable(alg.ctx(), 0);
  CHECK((row.terms[0].coeff - expect).is_zero());
  CHECK(relation_str(pres, row) == "product(1,1,1): (-x11 + 1)*y11");
  CHECK(pres.map_lines == std::vector<std::string>{"rho(w1) = u1 (x) y11"});

  CHECK_THROWS_AS(
      emit_U_presentation(regular_module(fixtures::dual_numbers(q)), w, alg), input_error);
  CHECK_THROWS_AS(
      emit_U_presentation(w, regular_module(fixtures::dual_numbers(q)), alg), input_error);
}

TEST_CASE("the universal V-module presentation in the smallest case") {
  Field q = Field::rationals();
  PoissonStructure p = fixtures::split_idempotents(q, 1);
  auto alg = square(p);
  auto acts = zero_actions(*alg, 1);
  acts[0].at(0, 0) = Scalar::one(q);  // x11 |-> [1] kills x11 - x11^2
  AModuleStructure v(alg, 1, std::move(acts));
  REQUIRE(v.verify().empty());

  ModulePresentation pres = emit_V_presentation(v, regular_module(p));
  CHECK(pres.flavour == 'V');
  CHECK(pres.gen_names == std::vector<std::string>{"y11"});
  CHECK(pres.basis_labels == std::vector<std::string>{"e1"});
  REQUIRE(pres.relations.size() == 2);
  CHECK(relation_str(pres, pres.relations[0]) == "product(1,1,1): y11 - (e1 |> y11)");
  CHECK(relation_str(pres, pres.relations[1]) == "bracket(1,1,1): -(e1 ~> y11)");
  CHECK(pres.map_lines == std::vector<std::string>{"eta(w1) = y11 (x) v1"});

  // over the trivial W only the formal operator terms remain
  ModulePresentation trivial = emit_V_presentation(v, PoissonModuleStructure(p, 1));
  REQUIRE(trivial.relations.size() == 2);
  CHECK(relation_str(trivial, trivial.relations[0]) == "product(1,1,1): -(e1 |> y11)");
  CHECK(relation_str(trivial, trivial.relations[1]) == "bracket(1,1,1): -(e1 ~> y11)");

  CHECK_THROWS_AS(
      emit_V_presentation(v, regular_module(fixtures::dual_numbers(q))), input_error);
}

TEST_CASE("operator terms print the declared basis labels") {
  Field q = Field::rationals();
  PoissonStructure p(q, 1, std::nullopt, {"z"});
  auto alg = square(p);
  auto acts = zero_actions(*alg, 1);
  acts[0].at(0, 0) = Scalar::one(q);  // no relations: the square of a free point
  AModuleStructure v(alg, 1, std::move(acts));
  ModulePresentation pres = emit_V_presentation(v, PoissonModuleStructure(p, 1));
  REQUIRE(pres.relations.size() == 2);
  CHECK(relation_str(pres, pres.relations[0]) == "product(1,1,1): -(z |> y11)");
  CHECK(relation_str(pres, pres.relations[1]) == "bracket(1,1,1): -(z ~> y11)");
}

TEST_CASE("the bigger presentations stay normalized and ordered") {
  Field q = Field::rationals();
  PoissonStructure p = fixtures::h3(q);
  UniversalPresentation alg = universal_algebra(p, p);
  PoissonModuleStructure reg = regular_module(p);
  ModulePresentation pres = emit_U_presentation(reg, reg, alg);
  QuotientRing ring = alg.quotient_ring();
  REQUIRE_FALSE(pres.relations.empty());
  bool seen_bracket = false;
  for (const ModuleRelationRow& row : pres.relations) {
    if (row.kind == RelationKind::bracket) seen_bracket = true;
    // the product family is emitted in one block before the bracket family
    if (row.kind == RelationKind::product) CHECK_FALSE(seen_bracket);
    for (const ModuleRelationTerm& t : row.terms) {
      CHECK_FALSE(t.coeff.is_zero());
      CHECK((t.coeff - ring.normalize(t.coeff)).is_zero());
    }
  }
  CHECK(seen_bracket);
  CHECK(pres.map_lines.size() == 3);
  CHECK(pres.map_lines[1] == "rho(w2) = u1 (x) y12 + u2 (x) y22 + u3 (x) y32");
}
