#include "puniv/module_functors.hpp"

#include <map>

namespace puniv {

namespace {

std::vector<std::string> grid_names(char letter, int rows, int cols) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(rows) * cols);
  const bool compact = rows <= 9 && cols <= 9;
  for (int a = 1; a <= rows; ++a)
    for (int b = 1; b <= cols; ++b)
      names.push_back(compact ? std::string(1, letter) + std::to_string(a) + std::to_string(b)
                              : std::string(1, letter) + std::to_string(a) + "_" +
                                    std::to_string(b));
  return names;
}

}  // namespace

AModuleStructure::AModuleStructure(std::shared_ptr<const UniversalPresentation> algebra,
                                   int dim, std::vector<ScalarMatrix> actions)
    : algebra_(std::move(algebra)), dim_(dim), actions_(std::move(actions)) {
  if (!algebra_) throw input_error("module needs its algebra");
  if (dim_ <= 0) throw input_error("module dimension must be positive");
  if (actions_.size() != algebra_->nvars())
    throw input_error("need one action matrix per generator, got " +
                      std::to_string(actions_.size()) + " of " +
                      std::to_string(algebra_->nvars()));
  const Field& f = algebra_->ctx()->field;
  for (const ScalarMatrix& m : actions_) {
    if (m.rows() != static_cast<std::size_t>(dim_) || m.cols() != static_cast<std::size_t>(dim_))
      throw input_error("action matrix must be " + std::to_string(dim_) + "x" +
                        std::to_string(dim_) + ", got " + m.shape());
    if (m.ring().field != f) throw input_error("action matrix over the wrong field");
  }
}

const ScalarMatrix& AModuleStructure::action(int s, int i) const {
  return actions_[algebra_->var_index(s, i)];
}

std::vector<LawFailure> AModuleStructure::verify() const {
  std::vector<LawFailure> failures;
  const auto& vars = algebra_->ctx()->vars;
  // images of commuting generators must commute for the action to be a map
  // from the (commutative) polynomial ring at all
  for (std::size_t a = 0; a < actions_.size(); ++a)
    for (std::size_t b = a + 1; b < actions_.size(); ++b)
      if (actions_[a] * actions_[b] != actions_[b] * actions_[a])
        failures.push_back({"commutation", vars[a] + "," + vars[b]});
  DenseMatrixRing ring(algebra_->ctx()->field, static_cast<std::size_t>(dim_));
  for (const UniversalRelation& rel : algebra_->relations())
    if (!ring.is_zero(evaluate_polynomial(rel.poly, ring, actions_)))
      failures.push_back({"relation", rel.label()});
  return failures;
}

PoissonModuleStructure tensor_module(const PoissonModuleStructure& u,
                                     const AModuleStructure& v) {
  const UniversalPresentation& a = v.algebra();
  if (!(u.base() == a.P()))
    throw input_error("tensor module: U must be a module over the coacting algebra P");
  const int n = a.P().dim();
  const int m = a.Q().dim();
  const int du = u.dim();
  const int dv = v.dim();
  PoissonModuleStructure out(a.Q(), du * dv);
  const Scalar zero = Scalar::zero(a.ctx()->field);
  for (int i = 0; i < m; ++i)
    for (int aa = 0; aa < du; ++aa)
      for (int b = 0; b < dv; ++b)
        for (int s = 0; s < du; ++s)
          for (int t = 0; t < dv; ++t) {
            Scalar ca = zero, cl = zero;
            for (int j = 0; j < n; ++j) {
              const Scalar& act = v.action_coeff(j, i, t, b);
              if (act.is_zero()) continue;
              ca = ca + u.assoc(j, aa, s) * act;
              cl = cl + u.lie(j, aa, s) * act;
            }
            if (!ca.is_zero()) out.set_assoc(i, aa * dv + b, s * dv + t, ca);
            if (!cl.is_zero()) out.set_lie(i, aa * dv + b, s * dv + t, cl);
          }
  return out;
}

namespace {

using TermKey = std::tuple<ModuleRelationTerm::Op, int, int, int>;

void add_term(std::map<TermKey, Polynomial>& acc, const TermKey& key, const Polynomial& c) {
  auto it = acc.find(key);
  if (it == acc.end())
    acc.emplace(key, c);
  else
    it->second = it->second + c;
}

std::vector<ModuleRelationTerm> collect(std::map<TermKey, Polynomial>&& acc) {
  std::vector<ModuleRelationTerm> terms;
  for (auto& [key, coeff] : acc) {
    if (coeff.is_zero()) continue;
    auto [op, op_index, a, b] = key;
    terms.push_back(ModuleRelationTerm{op, op_index, a, b, std::move(coeff)});
  }
  return terms;
}

}  // namespace

ModulePresentation emit_U_presentation(const PoissonModuleStructure& u,
                                       const PoissonModuleStructure& w,
                                       const UniversalPresentation& algebra) {
  if (!(u.base() == algebra.P()))
    throw input_error("U must be a Poisson module over P");
  if (!(w.base() == algebra.Q()))
    throw input_error("W must be a Poisson module over Q");
  const int n = algebra.P().dim();
  const int m = algebra.Q().dim();
  const int du = u.dim();
  const int dw = w.dim();
  ModulePresentation out;
  out.flavour = 'U';
  out.gen_rows = du;
  out.gen_cols = dw;
  out.gen_names = grid_names('y', du, dw);
  QuotientRing ring = algebra.quotient_ring();
  const CtxPtr& ctx = algebra.ctx();
  for (RelationKind kind : {RelationKind::product, RelationKind::bracket}) {
    const bool bracket = kind == RelationKind::bracket;
    for (int s = 0; s < du; ++s)
      for (int i = 0; i < dw; ++i)
        for (int j = 0; j < m; ++j) {
          std::map<TermKey, Polynomial> acc;
          for (int p = 0; p < dw; ++p) {
            Scalar c = bracket ? w.lie(j, i, p) : w.assoc(j, i, p);
            if (!c.is_zero())
              add_term(acc, {ModuleRelationTerm::Op::none, -1, s, p},
                       Polynomial::constant(ctx, c));
          }
          for (int t = 0; t < du; ++t)
            for (int r = 0; r < n; ++r) {
              Scalar c = bracket ? u.lie(r, t, s) : u.assoc(r, t, s);
              if (c.is_zero()) continue;
              Polynomial coeff =
                  Polynomial::variable(ctx, algebra.var_index(r, j)).scaled(-c);
              add_term(acc, {ModuleRelationTerm::Op::none, -1, t, i}, coeff);
            }
          for (auto& [key, coeff] : acc) coeff = ring.normalize(coeff);
          std::vector<ModuleRelationTerm> terms = collect(std::move(acc));
          if (!terms.empty())
            out.relations.push_back(ModuleRelationRow{kind, s, i, j, std::move(terms)});
        }
  }
  for (int r = 0; r < dw; ++r) {
    std::string line = "rho(w" + std::to_string(r + 1) + ") =";
    for (int s = 0; s < du; ++s) {
      line += s == 0 ? " " : " + ";
      line += "u" + std::to_string(s + 1) + " (x) " + out.gen_name(s, r);
    }
    out.map_lines.push_back(std::move(line));
  }
  return out;
}

ModulePresentation emit_V_presentation(const AModuleStructure& v,
                                       const PoissonModuleStructure& w) {
  const UniversalPresentation& algebra = v.algebra();
  if (!(w.base() == algebra.Q()))
    throw input_error("W must be a Poisson module over Q");
  const int n = algebra.P().dim();
  const int m = algebra.Q().dim();
  const int dv = v.dim();
  const int dw = w.dim();
  ModulePresentation out;
  out.flavour = 'V';
  out.gen_rows = dw;
  out.gen_cols = dv;
  out.gen_names = grid_names('y', dw, dv);
  out.basis_labels = algebra.P().basis_labels();
  const CtxPtr& ctx = algebra.ctx();
  for (RelationKind kind : {RelationKind::product, RelationKind::bracket}) {
    const bool bracket = kind == RelationKind::bracket;
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < dw; ++r)
        for (int a = 0; a < dv; ++a) {
          std::map<TermKey, Polynomial> acc;
          for (int t = 0; t < dw; ++t) {
            Scalar c = bracket ? w.lie(j, r, t) : w.assoc(j, r, t);
            if (!c.is_zero())
              add_term(acc, {ModuleRelationTerm::Op::none, -1, t, a},
                       Polynomial::constant(ctx, c));
          }
          for (int i = 0; i < n; ++i)
            for (int b = 0; b < dv; ++b) {
              Scalar c = v.action_coeff(i, j, a, b);
              if (c.is_zero()) continue;
              add_term(acc,
                       {bracket ? ModuleRelationTerm::Op::lie : ModuleRelationTerm::Op::assoc,
                        i, r, b},
                       Polynomial::constant(ctx, -c));
            }
          std::vector<ModuleRelationTerm> terms = collect(std::move(acc));
          if (!terms.empty())
            out.relations.push_back(ModuleRelationRow{kind, j, r, a, std::move(terms)});
        }
  }
  for (int r = 0; r < dw; ++r) {
    std::string line = "eta(w" + std::to_string(r + 1) + ") =";
    for (int s = 0; s < dv; ++s) {
      line += s == 0 ? " " : " + ";
      line += out.gen_name(r, s) + " (x) v" + std::to_string(s + 1);
    }
    out.map_lines.push_back(std::move(line));
  }
  return out;
}

std::string relation_str(const ModulePresentation& pres, const ModuleRelationRow& row) {
  std::string head = row.kind == RelationKind::bracket ? "bracket(" : "product(";
  head += std::to_string(row.i1 + 1) + "," + std::to_string(row.i2 + 1) + "," +
          std::to_string(row.i3 + 1) + "):";
  std::string body;
  for (std::size_t k = 0; k < row.terms.size(); ++k) {
    const ModuleRelationTerm& t = row.terms[k];
    std::string core = pres.gen_name(t.gen_a, t.gen_b);
    if (t.op != ModuleRelationTerm::Op::none) {
      const std::string& e = pres.basis_labels[t.op_index];
      core = "(" + e + (t.op == ModuleRelationTerm::Op::assoc ? " |> " : " ~> ") + core + ")";
    }
    bool negative = false;
    std::string cs;
    if (t.coeff.size() == 1) {
      // single-term coefficient: pull the sign out in front of the term
      Polynomial mag = t.coeff;
      std::string c = mag.str();
      if (!c.empty() && c[0] == '-') {
        negative = true;
        mag = -mag;
        c = mag.str();
      }
      cs = c == "1" ? core : c + "*" + core;
    } else {
      cs = "(" + t.coeff.str() + ")*" + core;
    }
    if (k == 0)
      body += negative ? " -" : " ";
    else
      body += negative ? " - " : " + ";
    body += cs;
  }
  return head + body;
}

}  // namespace puniv
