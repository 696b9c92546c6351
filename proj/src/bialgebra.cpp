#include "puniv/bialgebra.hpp"

#include <algorithm>
#include <map>

#include "puniv/linalg.hpp"

namespace puniv {

CoalgebraOnGenerators CoalgebraOnGenerators::standard(int n, const Field& f) {
  std::vector<std::vector<std::vector<TensorTerm>>> delta(
      n, std::vector<std::vector<TensorTerm>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      delta[i][j].reserve(n);
      for (int s = 0; s < n; ++s) delta[i][j].push_back(TensorTerm{i, s, s, j});
    }
  return CoalgebraOnGenerators{n, std::move(delta),
                               ScalarMatrix::identity(ScalarRing(f), n)};
}

UniversalBialgebra universal_bialgebra(const PoissonStructure& p, TermOrder order) {
  UniversalBialgebra b{universal_algebra(p, p, false, order),
                       CoalgebraOnGenerators::standard(p.dim(), p.field())};
  return b;
}

Polynomial TensorPowerRing::embed(int leg, const Polynomial& p) const {
  if (leg < 0 || leg >= legs) throw input_error("tensor leg out of range");
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial m(ctx->nvars());
    for (std::size_t v = 0; v < mono.exps.size(); ++v) m.exps[leg_var(leg, v)] = mono.exps[v];
    m.degree = mono.degree;
    terms.emplace_back(std::move(m), coeff);
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

TensorPowerRing tensor_power(const UniversalPresentation& u, int legs) {
  if (legs < 1) throw input_error("tensor power needs at least one leg");
  TensorPowerRing t;
  t.base_nvars = u.nvars();
  t.legs = legs;
  std::vector<std::string> names;
  names.reserve(t.base_nvars * legs);
  for (int l = 0; l < legs; ++l) {
    std::string suffix(static_cast<std::size_t>(l), '\'');
    for (const std::string& v : u.ctx()->vars) names.push_back(v + suffix);
  }
  t.ctx = make_context(u.ctx()->field, std::move(names), u.ctx()->order);
  // block-embedded reduced bases: leading terms live in disjoint variable
  // blocks, so their union is already the reduced basis of the sum ideal
  std::vector<Polynomial> basis;
  basis.reserve(u.ideal().basis.size() * legs);
  for (int l = 0; l < legs; ++l)
    for (const Polynomial& g : u.ideal().basis) basis.push_back(t.embed(l, g));
  t.ideal = assume_reduced_basis(t.ctx, std::move(basis));
  return t;
}

Polynomial delta_hat(const Polynomial& p, const CoalgebraOnGenerators& co,
                     const UniversalPresentation& u, const TensorPowerRing& t2,
                     int leg0, int leg1) {
  const int n = co.n;
  if (u.P().dim() != n || u.Q().dim() != n)
    throw input_error("comultiplication data needs the square presentation");
  QuotientRing ring = t2.ring();
  std::vector<Polynomial> values;
  values.reserve(u.nvars());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial v = Polynomial::zero(t2.ctx);
      for (const auto& term : co.delta[i][j]) {
        Polynomial left = Polynomial::variable(
            t2.ctx, t2.leg_var(leg0, u.var_index(term.a, term.b)));
        Polynomial right = Polynomial::variable(
            t2.ctx, t2.leg_var(leg1, u.var_index(term.c, term.d)));
        v = v + left * right;
      }
      values.push_back(std::move(v));
    }
  return evaluate_polynomial(p, ring, values);
}

Scalar epsilon_hat(const Polynomial& p, const CoalgebraOnGenerators& co,
                   const UniversalPresentation& u) {
  const int n = co.n;
  ScalarRing ring(u.ctx()->field);
  std::vector<Scalar> values;
  values.reserve(u.nvars());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) values.push_back(co.epsilon.at(i, j));
  return evaluate_polynomial(p, ring, values);
}

std::vector<LawFailure> verify_bialgebra(const UniversalPresentation& u,
                                         const CoalgebraOnGenerators& co) {
  std::vector<LawFailure> failures;
  const int n = co.n;
  if (u.P().dim() != n || u.Q().dim() != n)
    throw input_error("bialgebra verification needs the square presentation");
  TensorPowerRing t2 = tensor_power(u, 2);
  QuotientRing ring2 = t2.ring();
  // Delta descends: the image of every relation lies in J(x)1 + 1(x)J
  for (const UniversalRelation& rel : u.relations()) {
    if (!ring2.is_zero(delta_hat(rel.poly, co, u, t2)))
      failures.push_back({"delta-well-defined", rel.label()});
  }
  // epsilon descends: every relation evaluates to zero under the counit data
  for (const UniversalRelation& rel : u.relations()) {
    if (!epsilon_hat(rel.poly, co, u).is_zero())
      failures.push_back({"epsilon-well-defined", rel.label()});
  }
  // coassociativity on generators, computed in the triple quotient
  TensorPowerRing t3 = tensor_power(u, 3);
  QuotientRing ring3 = t3.ring();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial lhs = Polynomial::zero(t3.ctx);  // (Delta (x) id) Delta
      Polynomial rhs = Polynomial::zero(t3.ctx);  // (id (x) Delta) Delta
      for (const auto& term : co.delta[i][j]) {
        Polynomial inner_l = delta_hat(
            Polynomial::variable(u.ctx(), u.var_index(term.a, term.b)), co, u, t3, 0, 1);
        Polynomial outer_l =
            Polynomial::variable(t3.ctx, t3.leg_var(2, u.var_index(term.c, term.d)));
        lhs = lhs + inner_l * outer_l;
        Polynomial outer_r =
            Polynomial::variable(t3.ctx, t3.leg_var(0, u.var_index(term.a, term.b)));
        Polynomial inner_r = delta_hat(
            Polynomial::variable(u.ctx(), u.var_index(term.c, term.d)), co, u, t3, 1, 2);
        rhs = rhs + outer_r * inner_r;
      }
      if (!ring3.is_zero(lhs - rhs))
        failures.push_back({"coassociativity", "x(" + std::to_string(i + 1) + "," +
                                                   std::to_string(j + 1) + ")"});
    }
  // counit law on generators: (eps (x) id) Delta = id = (id (x) eps) Delta
  QuotientRing base = u.quotient_ring();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial left = Polynomial::zero(u.ctx());
      Polynomial right = Polynomial::zero(u.ctx());
      for (const auto& term : co.delta[i][j]) {
        left = left + Polynomial::variable(u.ctx(), u.var_index(term.c, term.d))
                          .scaled(co.epsilon.at(term.a, term.b));
        right = right + Polynomial::variable(u.ctx(), u.var_index(term.a, term.b))
                            .scaled(co.epsilon.at(term.c, term.d));
      }
      Polynomial gen = Polynomial::variable(u.ctx(), u.var_index(i, j));
      const char* loc = nullptr;
      if (!base.is_zero(left - gen))
        loc = "left";
      else if (!base.is_zero(right - gen))
        loc = "right";
      if (loc)
        failures.push_back({"counit", std::string(loc) + " at x(" + std::to_string(i + 1) +
                                          "," + std::to_string(j + 1) + ")"});
    }
  return failures;
}

std::vector<LawFailure> verify_comodule(const UniversalPresentation& u,
                                        const CoalgebraOnGenerators& co,
                                        const std::optional<Matrix<QuotientRing>>& coaction) {
  std::vector<LawFailure> failures;
  const int n = co.n;
  if (u.P().dim() != n || u.Q().dim() != n)
    throw input_error("comodule verification needs the square presentation");
  Matrix<QuotientRing> rho = coaction ? *coaction : eta(u);
  if (rho.rows() != static_cast<std::size_t>(n) || rho.cols() != static_cast<std::size_t>(n))
    throw input_error("coaction matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  TensorPowerRing t2 = tensor_power(u, 2);
  QuotientRing ring2 = t2.ring();
  // coaction square: for each basis vector e_i and output slot t,
  // Delta(rho(t,i)) = sum_s rho(t,s) (x) rho(s,i)
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      Polynomial lhs = delta_hat(rho.at(t, i), co, u, t2);
      Polynomial rhs = Polynomial::zero(t2.ctx);
      for (int s = 0; s < n; ++s)
        rhs = rhs + t2.embed(0, rho.at(t, s)) * t2.embed(1, rho.at(s, i));
      if (!ring2.is_zero(lhs - rhs))
        failures.push_back({"coaction-square", "e" + std::to_string(i + 1) + " component " +
                                                   std::to_string(t + 1)});
    }
  // counit triangle: (id (x) eps) rho = id
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < n; ++t) {
      Scalar v = epsilon_hat(rho.at(t, i), co, u);
      Scalar want = t == i ? Scalar::one(u.ctx()->field) : Scalar::zero(u.ctx()->field);
      if (v != want)
        failures.push_back({"counit-triangle", "e" + std::to_string(i + 1) + " component " +
                                                   std::to_string(t + 1)});
    }
  return failures;
}

std::vector<GroupLike> group_likes(const UniversalPresentation& u, std::uint64_t guard) {
  if (!(u.P() == u.Q()))
    throw input_error("group-likes need the square presentation P(P)");
  std::vector<ScalarMatrix> maps = enumerate_algebra_maps(u, guard);
  std::vector<GroupLike> out;
  out.reserve(maps.size());
  for (ScalarMatrix& m : maps) {
    std::optional<ScalarMatrix> inv = invert(m);
    out.push_back(GroupLike{std::move(m), std::move(inv)});
  }
  return out;
}

AutomorphismGroup automorphism_group(const PoissonStructure& p, std::uint64_t guard) {
  UniversalPresentation u = universal_algebra(p, p);
  std::vector<GroupLike> all = group_likes(u, guard);
  AutomorphismGroup g;
  g.grouplike_count = all.size();
  for (GroupLike& gl : all)
    if (gl.inverse) g.elements.push_back(std::move(gl.matrix));
  auto key = [&](const ScalarMatrix& m) {
    std::vector<std::uint32_t> k;
    k.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m.at(i, j).residue());
    return k;
  };
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < g.elements.size(); ++i) index[key(g.elements[i])] = i;
  g.table.assign(g.elements.size(), std::vector<std::size_t>(g.elements.size(), 0));
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (std::size_t j = 0; j < g.elements.size(); ++j) {
      auto it = index.find(key(g.elements[i] * g.elements[j]));
      if (it == index.end())
        throw std::logic_error("convolution left the set of invertible group-likes");
      g.table[i][j] = it->second;
    }
  return g;
}

}  // namespace puniv
