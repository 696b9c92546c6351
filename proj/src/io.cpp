#include "puniv/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "puniv/bialgebra.hpp"
#include "puniv/gradings.hpp"

namespace puniv {

// ---------------------------------------------------------------------------
// Field / coefficient encoding
// ---------------------------------------------------------------------------

Field parse_field_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw input_error("field descriptor string must be \"Q\" (finite fields use {\"Fp\": p})");
  }
  if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
    const json& p = j["Fp"];
    if (!p.is_number_integer() || p.get<long long>() <= 0)
      throw input_error("field descriptor {\"Fp\": p} needs a positive integer p");
    return Field::prime(static_cast<std::uint32_t>(p.get<long long>()));
  }
  throw input_error("field descriptor must be \"Q\" or {\"Fp\": p}");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

Field parse_field_flag(const std::string& text) {
  if (text == "Q") return Field::rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    errno = 0;
    char* end = nullptr;
    unsigned long long p = std::strtoull(text.c_str() + 1, &end, 10);
    if (errno == 0 && end && *end == '\0' && p > 0 && p < (1ull << 31))
      return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw input_error("field must be written Q or Fp (e.g. F5), got \"" + text + "\"");
}

Scalar parse_coeff(const Field& f, const json& j) {
  if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw input_error("coefficients must be integers or exact \"a/b\" strings");
}

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

namespace {

void check_keys(const json& doc, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (item.key() == a) {
        known = true;
        break;
      }
    if (!known) throw input_error(std::string(what) + ": unknown key \"" + item.key() + "\"");
  }
}

int get_positive_int(const json& doc, const char* key, const char* what) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw input_error(std::string(what) + ": \"" + key + "\" must be an integer");
  long long v = doc[key].get<long long>();
  if (v <= 0 || v > 1 << 20)
    throw input_error(std::string(what) + ": \"" + key + "\" out of range");
  return static_cast<int>(v);
}

struct Entry {
  int i, j, s;
  Scalar c;
};

std::vector<Entry> read_entries(const json& doc, const char* key, const Field& f,
                                const char* what) {
  std::vector<Entry> out;
  if (!doc.contains(key)) return out;
  const json& arr = doc[key];
  if (!arr.is_array())
    throw input_error(std::string(what) + ": \"" + key + "\" must be a list of entries");
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 4)
      throw input_error(std::string(what) + ": \"" + key +
                        "\" entries must be [i, j, s, coeff]");
    for (int k = 0; k < 3; ++k)
      if (!e[k].is_number_integer() || e[k].get<long long>() < 1)
        throw input_error(std::string(what) + ": \"" + key +
                          "\" indices must be positive integers (1-based)");
    out.push_back(Entry{e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                        parse_coeff(f, e[3])});
  }
  return out;
}

}  // namespace

PoissonStructure parse_algebra(const json& doc, bool verified) {
  const char* what = "algebra document";
  if (!doc.is_object()) throw input_error(std::string(what) + " must be a JSON object");
  check_keys(doc, {"field", "dim", "unit", "basis", "name", "product", "bracket"}, what);
  if (!doc.contains("field")) throw input_error(std::string(what) + ": missing \"field\"");
  Field f = parse_field_json(doc["field"]);
  int dim = get_positive_int(doc, "dim", what);
  std::optional<int> unit;
  if (doc.contains("unit")) {
    if (!doc["unit"].is_number_integer())
      throw input_error(std::string(what) + ": \"unit\" must be an integer");
    long long u = doc["unit"].get<long long>();
    if (u < 1 || u > dim) throw input_error(std::string(what) + ": unit index out of range");
    unit = static_cast<int>(u - 1);
  }
  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array())
      throw input_error(std::string(what) + ": \"basis\" must be a list of labels");
    for (const json& l : doc["basis"]) {
      if (!l.is_string())
        throw input_error(std::string(what) + ": basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != dim)
      throw input_error(std::string(what) + ": expected " + std::to_string(dim) +
                        " basis labels, got " + std::to_string(labels.size()));
  }
  PoissonStructure p(f, dim, unit, std::move(labels));
  for (const Entry& e : read_entries(doc, "product", f, what))
    p.set_product(e.i - 1, e.j - 1, e.s - 1, e.c);
  for (const Entry& e : read_entries(doc, "bracket", f, what))
    p.set_bracket(e.i - 1, e.j - 1, e.s - 1, e.c);
  if (verified) {
    std::vector<AxiomFailure> failures = verify_poisson(p);
    if (!failures.empty()) {
      std::string msg = std::string(what) + " violates the Poisson axioms:";
      for (const AxiomFailure& a : failures) msg += "\n  " + a.str();
      throw input_error(msg);
    }
  }
  return p;
}

json algebra_to_json(const PoissonStructure& p) {
  json doc;
  doc["field"] = field_to_json(p.field());
  doc["dim"] = p.dim();
  if (p.unit_index()) doc["unit"] = *p.unit_index() + 1;
  doc["basis"] = p.basis_labels();
  json prod = json::array();
  for (const auto& [key, c] : p.tau_map()) {
    if (key[0] > key[1] || c.is_zero()) continue;
    prod.push_back(json::array({key[0] + 1, key[1] + 1, key[2] + 1, c.str()}));
  }
  json br = json::array();
  for (const auto& [key, c] : p.mu_map()) {
    if (key[0] >= key[1] || c.is_zero()) continue;
    br.push_back(json::array({key[0] + 1, key[1] + 1, key[2] + 1, c.str()}));
  }
  doc["product"] = std::move(prod);
  doc["bracket"] = std::move(br);
  return doc;
}

PoissonModuleStructure parse_module(const json& doc, const PoissonStructure& base) {
  const char* what = "module document";
  if (!doc.is_object()) throw input_error(std::string(what) + " must be a JSON object");
  check_keys(doc, {"dim", "name", "assoc", "lie"}, what);
  int dim = get_positive_int(doc, "dim", what);
  PoissonModuleStructure m(base, dim);
  for (const char* key : {"assoc", "lie"}) {
    std::set<std::array<int, 3>> seen;
    for (const Entry& e : read_entries(doc, key, base.field(), what)) {
      if (!seen.insert({e.i, e.j, e.s}).second)
        throw input_error(std::string(what) + ": duplicate \"" + key + "\" entry at [" +
                          std::to_string(e.i) + "," + std::to_string(e.j) + "," +
                          std::to_string(e.s) + "]");
      if (key[0] == 'a')
        m.set_assoc(e.i - 1, e.j - 1, e.s - 1, e.c);
      else
        m.set_lie(e.i - 1, e.j - 1, e.s - 1, e.c);
    }
  }
  return m;
}

json module_to_json(const PoissonModuleStructure& m) {
  json doc;
  doc["dim"] = m.dim();
  json assoc = json::array();
  for (const auto& [key, c] : m.assoc_map()) {
    if (c.is_zero()) continue;
    assoc.push_back(json::array({key[0] + 1, key[1] + 1, key[2] + 1, c.str()}));
  }
  json lie = json::array();
  for (const auto& [key, c] : m.lie_map()) {
    if (c.is_zero()) continue;
    lie.push_back(json::array({key[0] + 1, key[1] + 1, key[2] + 1, c.str()}));
  }
  doc["assoc"] = std::move(assoc);
  doc["lie"] = std::move(lie);
  return doc;
}

AModuleStructure parse_amodule(const json& doc,
                               std::shared_ptr<const UniversalPresentation> algebra) {
  const char* what = "A-module document";
  if (!doc.is_object()) throw input_error(std::string(what) + " must be a JSON object");
  check_keys(doc, {"dim", "name", "actions"}, what);
  int dim = get_positive_int(doc, "dim", what);
  const int n = algebra->P().dim();
  const int m = algebra->Q().dim();
  const Field& f = algebra->ctx()->field;
  ScalarRing ring(f);
  std::vector<ScalarMatrix> actions(algebra->nvars(),
                                    ScalarMatrix(ring, static_cast<std::size_t>(dim),
                                                 static_cast<std::size_t>(dim)));
  std::set<std::pair<int, int>> seen;
  if (doc.contains("actions")) {
    if (!doc["actions"].is_array())
      throw input_error(std::string(what) + ": \"actions\" must be a list");
    for (const json& a : doc["actions"]) {
      if (!a.is_object())
        throw input_error(std::string(what) + ": each action must be an object");
      check_keys(a, {"row", "col", "matrix"}, what);
      if (!a.contains("row") || !a.contains("col") || !a.contains("matrix"))
        throw input_error(std::string(what) +
                          ": each action needs \"row\", \"col\" and \"matrix\"");
      int s = get_positive_int(a, "row", what);
      int i = get_positive_int(a, "col", what);
      if (s > n || i > m)
        throw input_error(std::string(what) + ": action generator index out of range");
      if (!seen.insert({s, i}).second)
        throw input_error(std::string(what) + ": duplicate action for generator x(" +
                          std::to_string(s) + "," + std::to_string(i) + ")");
      const json& rows = a["matrix"];
      if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
        throw input_error(std::string(what) + ": action matrix must have " +
                          std::to_string(dim) + " rows");
      ScalarMatrix mat(ring, static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
      for (int r = 0; r < dim; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
          throw input_error(std::string(what) + ": action matrix rows must have " +
                            std::to_string(dim) + " entries");
        for (int c = 0; c < dim; ++c)
          mat.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
              parse_coeff(f, row[static_cast<std::size_t>(c)]);
      }
      actions[algebra->var_index(s - 1, i - 1)] = std::move(mat);
    }
  }
  return AModuleStructure(std::move(algebra), dim, std::move(actions));
}

json amodule_to_json(const AModuleStructure& v) {
  const UniversalPresentation& a = v.algebra();
  json doc;
  doc["dim"] = v.dim();
  json actions = json::array();
  const int n = a.P().dim();
  const int m = a.Q().dim();
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < m; ++i) {
      const ScalarMatrix& mat = v.action(s, i);
      bool zero = true;
      json rows = json::array();
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < mat.cols(); ++c) {
          if (!mat.at(r, c).is_zero()) zero = false;
          row.push_back(mat.at(r, c).str());
        }
        rows.push_back(std::move(row));
      }
      if (!zero)
        actions.push_back(json{{"row", s + 1}, {"col", i + 1}, {"matrix", std::move(rows)}});
    }
  doc["actions"] = std::move(actions);
  return doc;
}

// ---------------------------------------------------------------------------
// Digests and rendering
// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest(const json& canonical_doc) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_doc.dump(2))));
  return buf;
}

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

namespace {

json matrix_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json quotient_matrix_json(const Matrix<QuotientRing>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json basis_json(const IdealBasis& ideal) {
  json out = json::array();
  for (const Polynomial& b : ideal.basis) out.push_back(b.str());
  return out;
}

void finish(json& report, std::vector<std::string> failures) {
  report["failures"] = failures;
  report["status"] = failures.empty() ? "ok" : "verification-failed";
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw input_error(path + ": " + e.what());
  }
}

PoissonStructure resolve_field(const PoissonStructure& p, const std::string& flag,
                               bool need_finite) {
  PoissonStructure out = p;
  if (!flag.empty()) {
    Field target = parse_field_flag(flag);
    if (!(target == p.field())) out = change_field(p, target);
  }
  if (need_finite && out.field().is_rational())
    throw input_error("this command enumerates over a finite field; pass --field Fp");
  return out;
}

std::uint64_t guard_from_env() {
  const char* v = std::getenv("PUNIV_ENUM_GUARD");
  if (!v) return kDefaultEnumGuard;
  errno = 0;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (errno != 0 || end == v || *end != '\0' || x == 0)
    throw input_error("PUNIV_ENUM_GUARD must be a positive integer");
  return std::min<std::uint64_t>(x, kMaxEnumGuard);
}

}  // namespace

json report_verify(const json& doc) {
  PoissonStructure p = parse_algebra(doc, /*verified=*/false);
  json report;
  report["command"] = "verify";
  report["inputs"] = json{{"algebra", digest(algebra_to_json(p))}};
  std::vector<std::string> failures;
  for (const AxiomFailure& a : verify_poisson(p)) failures.push_back(a.str());
  json outputs;
  outputs["dim"] = p.dim();
  outputs["field"] = p.field().str();
  outputs["poisson"] = failures.empty();
  report["outputs"] = std::move(outputs);
  finish(report, std::move(failures));
  return report;
}

json report_universal(const json& doc_p, const json& doc_q, bool unital, TermOrder order) {
  PoissonStructure p = parse_algebra(doc_p);
  PoissonStructure q = parse_algebra(doc_q);
  UniversalPresentation u = universal_algebra(p, q, unital, order);
  json report;
  report["command"] = "universal";
  report["inputs"] = json{{"P", digest(algebra_to_json(p))}, {"Q", digest(algebra_to_json(q))}};
  json outputs;
  outputs["field"] = p.field().str();
  outputs["order"] = term_order_name(order);
  outputs["unital"] = unital;
  outputs["variables"] = u.ctx()->vars;
  outputs["raw_relation_count"] = u.raw_relation_count();
  json rels = json::array();
  for (const UniversalRelation& r : u.relations())
    rels.push_back(json{{"label", r.label()}, {"poly", r.poly.str()}});
  outputs["relations"] = std::move(rels);
  outputs["groebner_basis"] = basis_json(u.ideal());
  outputs["eta"] = quotient_matrix_json(eta(u));
  report["outputs"] = std::move(outputs);
  finish(report, {});
  return report;
}

json report_bialgebra(const json& doc) {
  PoissonStructure p = parse_algebra(doc);
  UniversalBialgebra b = universal_bialgebra(p);
  const UniversalPresentation& u = b.presentation;
  TensorPowerRing t2 = tensor_power(u, 2);
  QuotientRing t2r = t2.ring();
  json report;
  report["command"] = "bialgebra";
  report["inputs"] = json{{"algebra", digest(algebra_to_json(p))}};
  json outputs;
  outputs["field"] = p.field().str();
  outputs["variables"] = u.ctx()->vars;
  outputs["raw_relation_count"] = u.raw_relation_count();
  outputs["groebner_basis"] = basis_json(u.ideal());
  json delta_out = json::object();
  json eps_out = json::object();
  const int n = p.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::size_t idx = u.var_index(i, j);
      Polynomial gen = Polynomial::variable(u.ctx(), idx);
      const std::string& name = u.ctx()->vars[idx];
      delta_out[name] = t2r.normalize(delta_hat(gen, b.coalgebra, u, t2)).str();
      eps_out[name] = epsilon_hat(gen, b.coalgebra, u).str();
    }
  outputs["delta"] = std::move(delta_out);
  outputs["epsilon"] = std::move(eps_out);
  outputs["eta"] = quotient_matrix_json(eta(u));
  report["outputs"] = std::move(outputs);
  std::vector<std::string> failures;
  for (const LawFailure& f : verify_bialgebra(u, b.coalgebra)) failures.push_back(f.str());
  for (const LawFailure& f : verify_comodule(u, b.coalgebra)) failures.push_back(f.str());
  finish(report, std::move(failures));
  return report;
}

json report_endomorphisms(const json& doc, const std::string& field_flag, std::uint64_t guard) {
  PoissonStructure given = parse_algebra(doc);
  PoissonStructure p = resolve_field(given, field_flag, /*need_finite=*/true);
  std::vector<ScalarMatrix> maps = hom_poisson(p, p, guard);
  json report;
  report["command"] = "endomorphisms";
  report["inputs"] = json{{"algebra", digest(algebra_to_json(given))}};
  json outputs;
  outputs["field"] = p.field().str();
  outputs["count"] = maps.size();
  json elems = json::array();
  for (const ScalarMatrix& m : maps) elems.push_back(matrix_json(m));
  outputs["elements"] = std::move(elems);
  report["outputs"] = std::move(outputs);
  finish(report, {});
  return report;
}

json report_automorphisms(const json& doc, const std::string& field_flag, std::uint64_t guard) {
  PoissonStructure given = parse_algebra(doc);
  PoissonStructure p = resolve_field(given, field_flag, /*need_finite=*/true);
  AutomorphismGroup aut = automorphism_group(p, guard);
  json report;
  report["command"] = "automorphisms";
  report["inputs"] = json{{"algebra", digest(algebra_to_json(given))}};
  json outputs;
  outputs["field"] = p.field().str();
  outputs["grouplike_count"] = aut.grouplike_count;
  outputs["order"] = aut.elements.size();
  json elems = json::array();
  for (const ScalarMatrix& m : aut.elements) elems.push_back(matrix_json(m));
  outputs["elements"] = std::move(elems);
  outputs["table"] = aut.table;
  report["outputs"] = std::move(outputs);
  finish(report, {});
  return report;
}

namespace {

json grading_json(const Grading& g) {
  json arr = json::array();
  std::vector<FiniteAbelianGroup::Elem> elems = g.group.elements();
  for (std::size_t idx = 0; idx < g.components.size(); ++idx) {
    json rows = json::array();
    for (const std::vector<Scalar>& row : g.components[idx]) {
      json r = json::array();
      for (const Scalar& c : row) r.push_back(c.str());
      rows.push_back(std::move(r));
    }
    arr.push_back(json{{"sigma", g.group.elem_str(elems[idx])}, {"basis", std::move(rows)}});
  }
  return arr;
}

}  // namespace

json report_gradings(const json& doc, const std::string& group_flag,
                     const std::string& field_flag, bool classify, std::uint64_t guard) {
  PoissonStructure given = parse_algebra(doc);
  PoissonStructure p = resolve_field(given, field_flag, /*need_finite=*/true);
  FiniteAbelianGroup G = FiniteAbelianGroup::parse(group_flag);
  json report;
  report["command"] = "gradings";
  report["inputs"] = json{{"algebra", digest(algebra_to_json(given))}};
  json outputs;
  outputs["field"] = p.field().str();
  outputs["group"] = G.str();
  if (classify) {
    GradingClassification c = classify_gradings(p, G, guard);
    outputs["count"] = c.gradings.size();
    json gr = json::array();
    for (const Grading& g : c.gradings) gr.push_back(grading_json(g));
    outputs["gradings"] = std::move(gr);
    json orbits = json::array();
    for (const GradingOrbit& o : c.orbits)
      orbits.push_back(json{{"representative", o.representative}, {"members", o.members}});
    outputs["orbits"] = std::move(orbits);
  } else {
    std::vector<Grading> gradings = enumerate_gradings(p, G, guard);
    outputs["count"] = gradings.size();
    json gr = json::array();
    for (const Grading& g : gradings) gr.push_back(grading_json(g));
    outputs["gradings"] = std::move(gr);
  }
  report["outputs"] = std::move(outputs);
  finish(report, {});
  return report;
}

json report_tensor_module(const json& doc_p, const json& doc_q, const json& doc_u,
                          const json& doc_v) {
  PoissonStructure p = parse_algebra(doc_p);
  PoissonStructure q = parse_algebra(doc_q);
  auto algebra = std::make_shared<UniversalPresentation>(universal_algebra(p, q));
  PoissonModuleStructure u = parse_module(doc_u, p);
  AModuleStructure v = parse_amodule(doc_v, algebra);
  json report;
  report["command"] = "tensor-module";
  report["inputs"] = json{{"P", digest(algebra_to_json(p))},
                          {"Q", digest(algebra_to_json(q))},
                          {"U", digest(module_to_json(u))},
                          {"V", digest(amodule_to_json(v))}};
  std::vector<std::string> failures;
  for (const AxiomFailure& f : verify_poisson_module(u)) failures.push_back("U: " + f.str());
  for (const LawFailure& f : v.verify()) failures.push_back("V: " + f.str());
  json outputs;
  outputs["field"] = p.field().str();
  if (failures.empty()) {
    PoissonModuleStructure t = tensor_module(u, v);
    for (const AxiomFailure& f : verify_poisson_module(t))
      failures.push_back("tensor: " + f.str());
    outputs["module"] = module_to_json(t);
  }
  report["outputs"] = std::move(outputs);
  finish(report, std::move(failures));
  return report;
}

json report_presentation(const std::string& flavour, const json& doc_p, const json& doc_q,
                         const json& doc_m, const json& doc_w) {
  PoissonStructure p = parse_algebra(doc_p);
  PoissonStructure q = parse_algebra(doc_q);
  auto algebra = std::make_shared<UniversalPresentation>(universal_algebra(p, q));
  PoissonModuleStructure w = parse_module(doc_w, q);
  json report;
  report["command"] = "presentation";
  json inputs;
  inputs["P"] = digest(algebra_to_json(p));
  inputs["Q"] = digest(algebra_to_json(q));
  inputs["W"] = digest(module_to_json(w));
  std::vector<std::string> failures;
  for (const AxiomFailure& f : verify_poisson_module(w)) failures.push_back("W: " + f.str());
  std::optional<ModulePresentation> pres;
  if (flavour == "U") {
    PoissonModuleStructure u = parse_module(doc_m, p);
    inputs["U"] = digest(module_to_json(u));
    for (const AxiomFailure& f : verify_poisson_module(u)) failures.push_back("U: " + f.str());
    if (failures.empty()) pres = emit_U_presentation(u, w, *algebra);
  } else {
    AModuleStructure v = parse_amodule(doc_m, algebra);
    inputs["V"] = digest(amodule_to_json(v));
    for (const LawFailure& f : v.verify()) failures.push_back("V: " + f.str());
    if (failures.empty()) pres = emit_V_presentation(v, w);
  }
  report["inputs"] = std::move(inputs);
  json outputs;
  outputs["field"] = p.field().str();
  outputs["flavour"] = flavour;
  if (pres) {
    outputs["generators"] = pres->gen_names;
    json rels = json::array();
    for (const ModuleRelationRow& row : pres->relations)
      rels.push_back(relation_str(*pres, row));
    outputs["relations"] = std::move(rels);
    outputs["map"] = pres->map_lines;
  }
  report["outputs"] = std::move(outputs);
  finish(report, std::move(failures));
  return report;
}

namespace {

json error_report(const std::string& command, const std::string& status,
                  const std::string& message) {
  json report;
  report["command"] = command;
  report["error"] = message;
  report["status"] = status;
  return report;
}

}  // namespace

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"exact universal constructions for finite-dimensional Poisson algebras"};
  app.name("puniv");
  app.require_subcommand(1);

  std::string path_a, path_b, path_c, path_d;
  std::string order_name = "degrevlex", field_flag, group_flag, flavour;
  bool unital = false, classify = false;

  CLI::App* c_verify = app.add_subcommand("verify", "check the Poisson axioms of an algebra");
  c_verify->add_option("algebra", path_a, "algebra document")->required();

  CLI::App* c_universal =
      app.add_subcommand("universal", "present the universal algebra of a pair (P, Q)");
  c_universal->add_option("P", path_a, "algebra document for P")->required();
  c_universal->add_option("Q", path_b, "algebra document for Q")->required();
  c_universal->add_flag("--unital", unital, "build the unital variant");
  c_universal->add_option("--order", order_name, "term order")
      ->check(CLI::IsMember({"degrevlex", "lex"}));

  CLI::App* c_bialgebra =
      app.add_subcommand("bialgebra", "universal coacting bialgebra structure on P(P)");
  c_bialgebra->add_option("algebra", path_a, "algebra document")->required();

  CLI::App* c_endo =
      app.add_subcommand("endomorphisms", "Poisson endomorphisms over a finite field");
  c_endo->add_option("algebra", path_a, "algebra document")->required();
  c_endo->add_option("--field", field_flag, "finite field, e.g. F5");

  CLI::App* c_auto =
      app.add_subcommand("automorphisms", "Poisson automorphism group over a finite field");
  c_auto->add_option("algebra", path_a, "algebra document")->required();
  c_auto->add_option("--field", field_flag, "finite field, e.g. F5");

  CLI::App* c_gradings =
      app.add_subcommand("gradings", "group gradings over a finite field");
  c_gradings->add_option("algebra", path_a, "algebra document")->required();
  c_gradings->add_option("--group", group_flag, "finite abelian group, e.g. Z2 or Z2xZ4")
      ->required();
  c_gradings->add_option("--field", field_flag, "finite field, e.g. F5");
  c_gradings->add_flag("--classify", classify, "partition into isomorphism classes");

  CLI::App* c_tensor = app.add_subcommand(
      "tensor-module", "induced Poisson Q-module structure on U (x) V");
  c_tensor->add_option("P", path_a, "algebra document for P")->required();
  c_tensor->add_option("Q", path_b, "algebra document for Q")->required();
  c_tensor->add_option("U", path_c, "Poisson P-module document")->required();
  c_tensor->add_option("V", path_d, "A-module document over P(P,Q)")->required();

  CLI::App* c_pres = app.add_subcommand(
      "presentation", "generators and relations of the universal modules U(U,W) / V(V,W)");
  c_pres->add_option("flavour", flavour, "U or V")
      ->required()
      ->check(CLI::IsMember({"U", "V"}));
  c_pres->add_option("P", path_a, "algebra document for P")->required();
  c_pres->add_option("Q", path_b, "algebra document for Q")->required();
  c_pres->add_option("M", path_c, "Poisson P-module (U) or A-module (V) document")->required();
  c_pres->add_option("W", path_d, "Poisson Q-module document")->required();

  CommandResult result;
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("puniv");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.exit_code = 0;
    result.text = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.report = error_report("parse", "input-error", e.what());
    result.text = render_report(result.report);
    return result;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    std::uint64_t guard = guard_from_env();
    json report;
    if (c_verify->parsed()) {
      report = report_verify(load_document(path_a));
    } else if (c_universal->parsed()) {
      report = report_universal(load_document(path_a), load_document(path_b), unital,
                             parse_term_order(order_name));
    } else if (c_bialgebra->parsed()) {
      report = report_bialgebra(load_document(path_a));
    } else if (c_endo->parsed()) {
      report = report_endomorphisms(load_document(path_a), field_flag, guard);
    } else if (c_auto->parsed()) {
      report = report_automorphisms(load_document(path_a), field_flag, guard);
    } else if (c_gradings->parsed()) {
      report = report_gradings(load_document(path_a), group_flag, field_flag, classify, guard);
    } else if (c_tensor->parsed()) {
      report = report_tensor_module(load_document(path_a), load_document(path_b),
                                 load_document(path_c), load_document(path_d));
    } else {
      report = report_presentation(flavour, load_document(path_a), load_document(path_b),
                                load_document(path_c), load_document(path_d));
    }
    result.exit_code = report["status"] == "ok" ? 0 : 1;
    result.report = std::move(report);
  } catch (const guard_error& e) {
    result.exit_code = 3;
    result.report = error_report(command, "guard-exceeded", e.what());
  } catch (const input_error& e) {
    result.exit_code = 2;
    result.report = error_report(command, "input-error", e.what());
  } catch (const substitution_error& e) {
    result.exit_code = 2;
    result.report = error_report(command, "input-error", e.what());
  }
  result.text = render_report(result.report);
  return result;
}

}  // namespace puniv
