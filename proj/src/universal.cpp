#include "puniv/universal.hpp"

#include <algorithm>

namespace puniv {

std::string UniversalRelation::label() const {
  switch (kind) {
    case RelationKind::product:
      return "product(" + std::to_string(a + 1) + "," + std::to_string(i + 1) + "," +
             std::to_string(j + 1) + ")";
    case RelationKind::bracket:
      return "bracket(" + std::to_string(a + 1) + "," + std::to_string(i + 1) + "," +
             std::to_string(j + 1) + ")";
    case RelationKind::unital:
      return "unit(" + std::to_string(a + 1) + ")";
  }
  return "?";
}

std::vector<std::string> universal_var_names(int n, int m) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) * m);
  const bool compact = n <= 9 && m <= 9;
  for (int s = 1; s <= n; ++s)
    for (int i = 1; i <= m; ++i)
      names.push_back(compact ? "x" + std::to_string(s) + std::to_string(i)
                              : "x" + std::to_string(s) + "_" + std::to_string(i));
  return names;
}

std::vector<UniversalRelation> build_relations(const PoissonStructure& p,
                                               const PoissonStructure& q,
                                               const CtxPtr& ctx) {
  const int n = p.dim();
  const int m = q.dim();
  if (ctx->nvars() != static_cast<std::size_t>(n) * m)
    throw input_error("context has the wrong number of generators");
  if (p.field() != q.field() || ctx->field != p.field())
    throw input_error("algebras and context must share one field");
  auto var = [&](int s, int i) { return static_cast<std::size_t>(s) * m + i; };
  std::vector<UniversalRelation> out;
  auto emit = [&](RelationKind kind, bool bracket) {
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          std::vector<Polynomial::Term> terms;
          for (int u = 0; u < m; ++u) {
            Scalar c = bracket ? q.mu(i, j, u) : q.tau(i, j, u);
            if (c.is_zero()) continue;
            terms.emplace_back(Monomial::var(ctx->nvars(), var(a, u)), c);
          }
          for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
              Scalar c = bracket ? p.mu(s, t, a) : p.tau(s, t, a);
              if (c.is_zero()) continue;
              Monomial mono = mono_mul(Monomial::var(ctx->nvars(), var(s, i)),
                                       Monomial::var(ctx->nvars(), var(t, j)));
              terms.emplace_back(std::move(mono), -c);
            }
          Polynomial poly = Polynomial::from_terms(ctx, std::move(terms));
          if (!poly.is_zero()) out.push_back(UniversalRelation{kind, a, i, j, std::move(poly)});
        }
  };
  emit(RelationKind::product, false);
  emit(RelationKind::bracket, true);
  return out;
}

UniversalPresentation::UniversalPresentation(PoissonStructure P, PoissonStructure Q,
                                             bool unital, TermOrder order)
    : P_(std::move(P)), Q_(std::move(Q)), unital_(unital) {
  if (P_.field() != Q_.field())
    throw input_error("universal algebra needs both structures over one field");
  if (!verify_poisson(P_).empty())
    throw input_error("first structure fails the Poisson axioms");
  if (!verify_poisson(Q_).empty())
    throw input_error("second structure fails the Poisson axioms");
  const int n = P_.dim();
  const int m = Q_.dim();
  ctx_ = make_context(P_.field(), universal_var_names(n, m), order);
  relations_ = build_relations(P_, Q_, ctx_);
  raw_count_ = 2ull * n * m * m;
  if (unital_) {
    if (!P_.unit_index() || !Q_.unit_index())
      throw input_error("unital variant needs unit indices on both algebras");
    const int ip = *P_.unit_index();
    const int iq = *Q_.unit_index();
    for (int s = 0; s < n; ++s) {
      Polynomial gen = Polynomial::variable(ctx_, var_index(s, iq));
      if (s == ip)
        gen = gen - Polynomial::constant(ctx_, Scalar::one(ctx_->field));
      relations_.push_back(UniversalRelation{RelationKind::unital, s, iq, -1, std::move(gen)});
    }
    raw_count_ += n;
  }
  std::vector<Polynomial> gens;
  gens.reserve(relations_.size());
  for (const UniversalRelation& r : relations_) gens.push_back(r.poly);
  ideal_ = buchberger(gens);
  if (!ideal_.ctx) ideal_.ctx = ctx_;
}

std::size_t UniversalPresentation::var_index(int s, int i) const {
  const int m = Q_.dim();
  if (s < 0 || s >= P_.dim() || i < 0 || i >= m)
    throw input_error("generator index out of range");
  return static_cast<std::size_t>(s) * m + i;
}

UniversalPresentation universal_algebra(const PoissonStructure& p, const PoissonStructure& q,
                                        bool unital, TermOrder order) {
  return UniversalPresentation(p, q, unital, order);
}

Matrix<QuotientRing> eta(const UniversalPresentation& u) {
  QuotientRing ring = u.quotient_ring();
  Matrix<QuotientRing> m(ring, u.P().dim(), u.Q().dim());
  for (int s = 0; s < u.P().dim(); ++s)
    for (int i = 0; i < u.Q().dim(); ++i)
      m.at(s, i) = ring.normalize(Polynomial::variable(u.ctx(), u.var_index(s, i)));
  return m;
}

namespace {

struct CompiledTerm {
  std::uint32_t coeff;
  std::vector<std::uint32_t> vars;  // variable indices with multiplicity
};

struct CompiledRelation {
  std::vector<CompiledTerm> terms;
  std::size_t max_var;
};

// DFS over assignments in row-major variable order; each relation is tested
// at the shallowest depth where all its variables are bound, which prunes
// most of the p^(nm) grid.
std::vector<std::vector<std::uint32_t>> solve_relations_fp(
    const std::vector<Polynomial>& relations, std::size_t nvars, std::uint32_t p) {
  std::vector<CompiledRelation> compiled;
  for (const Polynomial& poly : relations) {
    CompiledRelation cr;
    cr.max_var = 0;
    for (const auto& [mono, coeff] : poly.terms()) {
      CompiledTerm t;
      t.coeff = coeff.residue();
      for (std::size_t v = 0; v < mono.exps.size(); ++v)
        for (std::uint32_t e = 0; e < mono.exps[v]; ++e) {
          t.vars.push_back(static_cast<std::uint32_t>(v));
          cr.max_var = std::max(cr.max_var, v);
        }
      cr.terms.push_back(std::move(t));
    }
    compiled.push_back(std::move(cr));
  }
  // constant relations either kill everything or nothing
  std::vector<std::vector<std::size_t>> by_depth(nvars);
  for (std::size_t r = 0; r < compiled.size(); ++r) {
    bool constant = true;
    for (const CompiledTerm& t : compiled[r].terms)
      if (!t.vars.empty()) constant = false;
    if (constant) {
      std::uint64_t v = 0;
      for (const CompiledTerm& t : compiled[r].terms) v = (v + t.coeff) % p;
      if (v != 0) return {};
      continue;
    }
    by_depth[compiled[r].max_var].push_back(r);
  }
  std::vector<std::vector<std::uint32_t>> solutions;
  std::vector<std::uint32_t> assign(nvars, 0);
  auto relation_holds = [&](std::size_t r) {
    std::uint64_t acc = 0;
    for (const CompiledTerm& t : compiled[r].terms) {
      std::uint64_t v = t.coeff;
      for (std::uint32_t var : t.vars) v = v * assign[var] % p;
      acc = (acc + v) % p;
    }
    return acc == 0;
  };
  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == nvars) {
      solutions.push_back(assign);
      return;
    }
    for (std::uint32_t val = 0; val < p; ++val) {
      assign[depth] = val;
      bool ok = true;
      for (std::size_t r : by_depth[depth])
        if (!relation_holds(r)) {
          ok = false;
          break;
        }
      if (ok) self(self, depth + 1);
    }
    assign[depth] = 0;
  };
  dfs(dfs, 0);
  return solutions;
}

void check_guard(std::uint32_t p, std::size_t nvars, std::uint64_t guard) {
  if (guard > kMaxEnumGuard) guard = kMaxEnumGuard;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (total > guard / p) {
      throw guard_error("search space " + std::to_string(p) + "^" + std::to_string(nvars) +
                        " exceeds the enumeration guard " + std::to_string(guard));
    }
    total *= p;
  }
  if (total > guard)
    throw guard_error("search space " + std::to_string(p) + "^" + std::to_string(nvars) +
                      " exceeds the enumeration guard " + std::to_string(guard));
}

}  // namespace

std::vector<ScalarMatrix> enumerate_algebra_maps(const UniversalPresentation& u,
                                                 std::uint64_t guard) {
  const Field& f = u.ctx()->field;
  if (f.is_rational())
    throw input_error("enumeration of algebra maps needs a finite field");
  const std::uint32_t p = f.characteristic();
  const std::size_t nvars = u.nvars();
  check_guard(p, nvars, guard);
  std::vector<Polynomial> rels;
  rels.reserve(u.relations().size());
  for (const UniversalRelation& r : u.relations()) rels.push_back(r.poly);
  std::vector<std::vector<std::uint32_t>> sols = solve_relations_fp(rels, nvars, p);
  std::vector<ScalarMatrix> out;
  out.reserve(sols.size());
  const int n = u.P().dim();
  const int m = u.Q().dim();
  for (const auto& sol : sols) {
    ScalarMatrix mat(ScalarRing(f), n, m);
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < m; ++i)
        mat.at(s, i) = Scalar::from_residue(f, sol[u.var_index(s, i)]);
    out.push_back(std::move(mat));
  }
  return out;
}

std::vector<ScalarMatrix> hom_poisson(const PoissonStructure& q, const PoissonStructure& p,
                                      std::uint64_t guard) {
  if (p.field() != q.field())
    throw input_error("hom-set needs both algebras over one field");
  UniversalPresentation u = universal_algebra(p, q);
  return enumerate_algebra_maps(u, guard);
}

Matrix<QuotientRing> functorial_map(const UniversalPresentation& src,
                                    const UniversalPresentation& tgt,
                                    const ScalarMatrix& morphism) {
  if (!(src.P() == tgt.P()))
    throw input_error("functorial map needs the same coacting side P");
  if (src.unital() != tgt.unital())
    throw input_error("functorial map across unital/non-unital variants");
  const int n = src.P().dim();
  const int m1 = src.Q().dim();
  const int m2 = tgt.Q().dim();
  if (morphism.rows() != static_cast<std::size_t>(m2) ||
      morphism.cols() != static_cast<std::size_t>(m1))
    throw input_error("morphism matrix must be " + std::to_string(m2) + "x" +
                      std::to_string(m1) + ", got " + morphism.shape());
  if (!check_poisson_morphism(morphism, src.Q(), tgt.Q(), src.unital()))
    throw input_error("input map is not a Poisson morphism Q1 -> Q2");
  QuotientRing ring = tgt.quotient_ring();
  Matrix<QuotientRing> theta(ring, n, m1);
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < m1; ++i) {
      Polynomial acc = Polynomial::zero(tgt.ctx());
      for (int j = 0; j < m2; ++j) {
        const Scalar& c = morphism.at(j, i);
        if (c.is_zero()) continue;
        acc = acc + Polynomial::variable(tgt.ctx(), tgt.var_index(s, j)).scaled(c);
      }
      theta.at(s, i) = ring.normalize(acc);
    }
  // the induced map must kill the source ideal; verify on the generators
  std::vector<Polynomial> values;
  values.reserve(src.nvars());
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < m1; ++i) values.push_back(theta.at(s, i));
  for (std::size_t r = 0; r < src.relations().size(); ++r) {
    const UniversalRelation& rel = src.relations()[r];
    if (!ring.is_zero(evaluate_polynomial(rel.poly, ring, values)))
      throw substitution_error("functorial image does not kill relation " + rel.label(), r);
  }
  return theta;
}

PoissonStructure change_field(const PoissonStructure& p, const Field& target) {
  if (p.field() == target) return p;
  auto convert = [&](const Scalar& c) {
    if (c.field().is_rational() && !target.is_rational())
      return Scalar::parse(target, c.str());
    throw input_error("unsupported base change " + c.field().str() + " -> " + target.str());
  };
  std::map<std::array<int, 3>, Scalar> tau, mu;
  for (const auto& [k, v] : p.tau_map()) {
    Scalar c = convert(v);
    if (!c.is_zero()) tau.emplace(k, c);
  }
  for (const auto& [k, v] : p.mu_map()) {
    Scalar c = convert(v);
    if (!c.is_zero()) mu.emplace(k, c);
  }
  return PoissonStructure::from_raw(target, p.dim(), std::move(tau), std::move(mu),
                                    p.unit_index());
}

}  // namespace puniv
