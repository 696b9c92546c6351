#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "puniv/poisson.hpp"
#include "puniv/rings.hpp"
#include "puniv/universal.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_structures.hpp"

using namespace puniv;

namespace {

bool has_axiom(const std::vector<AxiomFailure>& report, const std::string& axiom) {
  for (const AxiomFailure& f : report)
    if (f.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_CASE("the fixture algebras are Poisson algebras") {
  Field q = Field::rationals();
  CHECK(verify_poisson(fixtures::dual_numbers(q)).empty());
  CHECK(verify_poisson(fixtures::aff2(q)).empty());
  CHECK(verify_poisson(fixtures::h3(q)).empty());
  CHECK(verify_poisson(fixtures::abelian(q, 3)).empty());
  CHECK(verify_poisson(fixtures::heisenberg(q)).empty());
  CHECK(verify_poisson(fixtures::sl2(q)).empty());
  CHECK(verify_poisson(fixtures::truncated_poly(q, 4)).empty());
  CHECK(verify_poisson(fixtures::cyclic_group_algebra(q, 4)).empty());
  CHECK(verify_poisson(fixtures::split_idempotents(q, 3)).empty());
  CHECK(verify_poisson(fixtures::h3(Field::prime(2))).empty());
}

TEST_CASE("raw asymmetric constants are caught") {
  Field q = Field::rationals();
  std::map<std::array<int, 3>, Scalar> tau;
  tau[{0, 1, 0}] = Scalar::one(q);  // tau_{1,2}^1 = 1 but tau_{2,1}^1 = 0
  PoissonStructure p = PoissonStructure::from_raw(q, 2, tau, {});
  auto report = verify_poisson(p);
  REQUIRE_FALSE(report.empty());
  CHECK(report[0].axiom == "commutativity");
  CHECK(report[0].indices[0] == 1);
  CHECK(report[0].indices[1] == 2);
}

TEST_CASE("antisymmetry includes the vanishing diagonal") {
  Field q = Field::rationals();
  std::map<std::array<int, 3>, Scalar> mu;
  mu[{0, 0, 1}] = Scalar::one(q);  // [e1, e1] = e2
  PoissonStructure p = PoissonStructure::from_raw(q, 2, {}, mu);
  CHECK(has_axiom(verify_poisson(p), "antisymmetry"));
}

TEST_CASE("jacobi and leibniz violations are reported") {
  Field q = Field::rationals();
  PoissonStructure bad_jacobi(q, 3);
  bad_jacobi.set_bracket(0, 1, 1, Scalar::one(q));  // [e1,e2] = e2
  bad_jacobi.set_bracket(1, 2, 0, Scalar::one(q));  // [e2,e3] = e1
  CHECK(has_axiom(verify_poisson(bad_jacobi), "jacobi"));

  PoissonStructure bad_leibniz(q, 2);
  bad_leibniz.set_product(0, 0, 0, Scalar::one(q));  // e1^2 = e1
  bad_leibniz.set_bracket(0, 1, 1, Scalar::one(q));  // [e1,e2] = e2
  CHECK(has_axiom(verify_poisson(bad_leibniz), "leibniz"));
  CHECK_FALSE(has_axiom(verify_poisson(bad_leibniz), "jacobi"));
}

TEST_CASE("declared units are checked") {
  Field q = Field::rationals();
  PoissonStructure no_unit(q, 2, 0);  // claims e1 is a unit of the zero product
  CHECK(has_axiom(verify_poisson(no_unit), "unit"));
  CHECK(verify_poisson(fixtures::dual_numbers(q)).empty());  // honest unit
}

TEST_CASE("builder rejects bad input") {
  Field q = Field::rationals();
  PoissonStructure p(q, 2);
  CHECK_THROWS_AS(p.set_product(1, 0, 0, Scalar::one(q)), input_error);  // needs i <= j
  CHECK_THROWS_AS(p.set_bracket(1, 1, 0, Scalar::one(q)), input_error);  // needs i < j
  CHECK_THROWS_AS(p.set_product(0, 2, 0, Scalar::one(q)), input_error);  // out of range
  p.set_product(0, 1, 0, Scalar::one(q));
  CHECK_THROWS_AS(p.set_product(0, 1, 0, Scalar::from_int(q, 2)), input_error);
  CHECK_THROWS_AS(PoissonStructure(q, 0), input_error);
  CHECK_THROWS_AS(PoissonStructure(q, 2, 5), input_error);
  // completion: tau(1,0,s) mirrors tau(0,1,s), mu antisymmetrizes
  CHECK(p.tau(1, 0, 0).is_one());
  PoissonStructure b(q, 2);
  b.set_bracket(0, 1, 1, Scalar::one(q));
  CHECK(b.mu(1, 0, 1) == -Scalar::one(q));
  CHECK(b.mu(0, 0, 1).is_zero());
}

TEST_CASE("module fixtures verify") {
  Field q = Field::rationals();
  PoissonStructure h3 = fixtures::h3(q);

  PoissonModuleStructure trivial(h3, 2);
  CHECK(verify_poisson_module(trivial).empty());

  // the regular module: gamma = tau, omega = mu
  PoissonModuleStructure reg(h3, 3);
  for (const auto& [key, c] : h3.tau_map()) reg.set_assoc(key[0], key[1], key[2], c);
  for (const auto& [key, c] : h3.mu_map()) reg.set_lie(key[0], key[1], key[2], c);
  CHECK(verify_poisson_module(reg).empty());

  // abelian base, zero gamma, arbitrary single omega matrix
  PoissonStructure ab = fixtures::abelian(q, 1);
  PoissonModuleStructure lie_only(ab, 2);
  lie_only.set_lie(0, 0, 1, Scalar::from_int(q, 2));
  lie_only.set_lie(0, 1, 0, Scalar::from_int(q, -3));
  CHECK(verify_poisson_module(lie_only).empty());
}

TEST_CASE("a perturbed module constant is named by the report") {
  Field q = Field::rationals();
  PoissonStructure h3 = fixtures::h3(q);
  PoissonModuleStructure reg(h3, 3);
  for (const auto& [key, c] : h3.tau_map()) reg.set_assoc(key[0], key[1], key[2], c);
  for (const auto& [key, c] : h3.mu_map()) reg.set_lie(key[0], key[1], key[2], c);
  reg.set_assoc(2, 0, 0, Scalar::one(q));  // e3 |> u1 = u1, not a module any more
  auto report = verify_poisson_module(reg);
  REQUIRE_FALSE(report.empty());
  bool found = false;
  for (const AxiomFailure& f : report)
    if (f.axiom == "Pmod2" && f.indices == std::array<int, 3>{1, 3, 1} && f.component == 1)
      found = true;
  CHECK(found);
}

TEST_CASE("check_poisson_morphism over scalars") {
  Field f3 = Field::prime(3);
  PoissonStructure h3 = fixtures::h3(f3);
  ScalarRing ring(f3);
  CHECK(check_poisson_morphism(ScalarMatrix::identity(ring, 3), h3, h3));

  // the zero map preserves any structure but never a unit
  PoissonStructure dx = fixtures::dual_numbers(f3);
  ScalarMatrix zero(ring, 2, 2);
  PoissonStructure aff = fixtures::aff2(f3);
  CHECK(check_poisson_morphism(zero, aff, aff));
  CHECK(check_poisson_morphism(zero, dx, dx));
  CHECK_FALSE(check_poisson_morphism(zero, dx, dx, /*unital=*/true));
  CHECK(check_poisson_morphism(ScalarMatrix::identity(ring, 2), dx, dx, /*unital=*/true));
  CHECK_THROWS_AS(check_poisson_morphism(zero, aff, aff, /*unital=*/true), input_error);

  // shape and field mismatches are input errors
  CHECK_THROWS_AS(check_poisson_morphism(zero, h3, h3), input_error);
  CHECK_THROWS_AS(
      check_poisson_morphism(ScalarMatrix::identity(ScalarRing(Field::prime(5)), 3),
                             fixtures::h3(Field::prime(5)), h3),
      input_error);
}

TEST_CASE("morphism enumeration matches the brute-force oracle") {
  Field f2 = Field::prime(2);
  PoissonStructure h3 = fixtures::h3(f2);
  auto brute = oracles::poisson_morphisms_brute(h3, h3);
  CHECK(brute.size() == 12);
  for (const ScalarMatrix& d : brute) CHECK(check_poisson_morphism(d, h3, h3));
  auto auts = oracles::poisson_automorphisms_brute(h3);
  CHECK(auts.size() == 4);
  auto table = oracles::composition_table(auts);
  for (std::size_t i = 0; i < auts.size(); ++i) CHECK(table[i][i] == 0);  // involutions
}

TEST_CASE("random structures always verify") {
  randgen::Rng rng(20240811);
  for (int round = 0; round < 25; ++round) {
    Field f = round % 2 ? Field::prime(round % 4 ? 3 : 5) : Field::rationals();
    PoissonStructure p = randgen::random_poisson(rng, f, 3);
    CHECK(verify_poisson(p).empty());
    PoissonModuleStructure m = randgen::random_module(rng, p, 2);
    CHECK(verify_poisson_module(m).empty());
  }
}

TEST_CASE("transform oracle preserves the axioms") {
  randgen::Rng rng(7);
  Field f5 = Field::prime(5);
  PoissonStructure p = fixtures::h3(f5);
  auto [t, t_inv] = randgen::random_invertible(rng, f5, 3);
  PoissonStructure moved = oracles::transform_structure(p, t, t_inv);
  CHECK(verify_poisson(moved).empty());
  // base change by t then t_inv is the identity
  PoissonStructure back = oracles::transform_structure(moved, t_inv, t);
  CHECK(back == PoissonStructure::from_raw(f5, 3, p.tau_map(), p.mu_map()));
}
