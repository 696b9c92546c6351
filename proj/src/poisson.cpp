#include "puniv/poisson.hpp"

namespace puniv {

std::string AxiomFailure::str() const {
  std::string out = axiom + " at (";
  bool first = true;
  for (int v : indices) {
    if (v == 0) continue;
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += ") component " + std::to_string(component) + ", defect " + defect.str();
  return out;
}

PoissonStructure::PoissonStructure(Field field, int dim, std::optional<int> unit_index,
                                   std::vector<std::string> basis_labels)
    : field_(std::move(field)), dim_(dim), labels_(std::move(basis_labels)), unit_(unit_index) {
  if (dim <= 0) throw input_error("algebra dimension must be positive");
  if (unit_ && (*unit_ < 0 || *unit_ >= dim))
    throw input_error("unit index out of range");
  if (labels_.empty()) {
    labels_.reserve(dim);
    for (int i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
  } else if (static_cast<int>(labels_.size()) != dim) {
    throw input_error("basis label count does not match the dimension");
  }
}

void PoissonStructure::check_indices(int i, int j, int s) const {
  if (i < 0 || j < 0 || s < 0 || i >= dim_ || j >= dim_ || s >= dim_)
    throw input_error("structure constant index out of range for dimension " +
                      std::to_string(dim_));
}

void PoissonStructure::set_product(int i, int j, int s, const Scalar& c) {
  check_indices(i, j, s);
  if (i > j) throw input_error("product entries must have i <= j (the completion adds the mirror)");
  if (c.field() != field_) throw input_error("structure constant from the wrong field");
  auto put = [&](int a, int b) {
    auto key = std::array<int, 3>{a, b, s};
    auto it = tau_.find(key);
    if (it != tau_.end()) {
      if (it->second != c) throw input_error("inconsistent duplicate product entry");
      return;
    }
    if (!c.is_zero()) tau_.emplace(key, c);
  };
  put(i, j);
  if (i != j) put(j, i);
}

void PoissonStructure::set_bracket(int i, int j, int s, const Scalar& c) {
  check_indices(i, j, s);
  if (i >= j) throw input_error("bracket entries must have i < j (the completion adds the mirror)");
  if (c.field() != field_) throw input_error("structure constant from the wrong field");
  auto put = [&](int a, int b, const Scalar& v) {
    auto key = std::array<int, 3>{a, b, s};
    auto it = mu_.find(key);
    if (it != mu_.end()) {
      if (it->second != v) throw input_error("inconsistent duplicate bracket entry");
      return;
    }
    if (!v.is_zero()) mu_.emplace(key, v);
  };
  put(i, j, c);
  put(j, i, -c);
}

PoissonStructure PoissonStructure::from_raw(Field field, int dim,
                                            std::map<std::array<int, 3>, Scalar> tau,
                                            std::map<std::array<int, 3>, Scalar> mu,
                                            std::optional<int> unit_index) {
  PoissonStructure p(std::move(field), dim, unit_index);
  for (const auto& [k, v] : tau) p.check_indices(k[0], k[1], k[2]);
  for (const auto& [k, v] : mu) p.check_indices(k[0], k[1], k[2]);
  p.tau_ = std::move(tau);
  p.mu_ = std::move(mu);
  return p;
}

Scalar PoissonStructure::tau(int i, int j, int s) const {
  auto it = tau_.find({i, j, s});
  return it == tau_.end() ? Scalar::zero(field_) : it->second;
}

Scalar PoissonStructure::mu(int i, int j, int s) const {
  auto it = mu_.find({i, j, s});
  return it == mu_.end() ? Scalar::zero(field_) : it->second;
}

std::vector<Scalar> PoissonStructure::product_coords(int i, int j) const {
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (int s = 0; s < dim_; ++s) out[s] = tau(i, j, s);
  return out;
}

std::vector<Scalar> PoissonStructure::bracket_coords(int i, int j) const {
  std::vector<Scalar> out(dim_, Scalar::zero(field_));
  for (int s = 0; s < dim_; ++s) out[s] = mu(i, j, s);
  return out;
}

bool PoissonStructure::operator==(const PoissonStructure& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && labels_ == o.labels_ &&
         tau_ == o.tau_ && mu_ == o.mu_ && unit_ == o.unit_;
}

std::vector<AxiomFailure> verify_poisson(const PoissonStructure& p) {
  std::vector<AxiomFailure> failures;
  const int n = p.dim();
  const Scalar zero = Scalar::zero(p.field());
  auto report = [&](const char* axiom, int i, int j, int k, int s, const Scalar& defect) {
    if (!defect.is_zero())
      failures.push_back(AxiomFailure{axiom, {i + 1, j + 1, k + 1}, s + 1, defect});
  };
  // commutativity: tau symmetric in (i, j)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s = 0; s < n; ++s)
        report("commutativity", i, j, -1, s, p.tau(i, j, s) - p.tau(j, i, s));
  // antisymmetry: mu antisymmetric, vanishing diagonal
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < n; ++s)
      report("antisymmetry", i, i, -1, s, p.mu(i, i, s));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s = 0; s < n; ++s)
        report("antisymmetry", i, j, -1, s, p.mu(i, j, s) + p.mu(j, i, s));
  // associativity: (e_i e_j) e_k = e_i (e_j e_k)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s) {
          Scalar lhs = zero, rhs = zero;
          for (int u = 0; u < n; ++u) {
            lhs = lhs + p.tau(i, j, u) * p.tau(u, k, s);
            rhs = rhs + p.tau(j, k, u) * p.tau(i, u, s);
          }
          report("associativity", i, j, k, s, lhs - rhs);
        }
  // jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s) {
          Scalar sum = zero;
          for (int u = 0; u < n; ++u) {
            sum = sum + p.mu(j, k, u) * p.mu(i, u, s);
            sum = sum + p.mu(k, i, u) * p.mu(j, u, s);
            sum = sum + p.mu(i, j, u) * p.mu(k, u, s);
          }
          report("jacobi", i, j, k, s, sum);
        }
  // leibniz: [e_i, e_j e_k] = [e_i, e_j] e_k + e_j [e_i, e_k]
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s) {
          Scalar lhs = zero, rhs = zero;
          for (int u = 0; u < n; ++u) {
            lhs = lhs + p.tau(j, k, u) * p.mu(i, u, s);
            rhs = rhs + p.mu(i, j, u) * p.tau(u, k, s) + p.mu(i, k, u) * p.tau(j, u, s);
          }
          report("leibniz", i, j, k, s, lhs - rhs);
        }
  // declared unit: e_u e_j = e_j for all j (two-sided by commutativity, which
  // is checked separately)
  if (p.unit_index()) {
    int u = *p.unit_index();
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s) {
        Scalar want = s == j ? Scalar::one(p.field()) : zero;
        report("unit", u, j, -1, s, p.tau(u, j, s) - want);
      }
  }
  return failures;
}

PoissonModuleStructure::PoissonModuleStructure(PoissonStructure base, int dim)
    : base_(std::move(base)), dim_(dim) {
  if (dim <= 0) throw input_error("module dimension must be positive");
}

void PoissonModuleStructure::check_indices(int i, int j, int s) const {
  if (i < 0 || i >= base_.dim() || j < 0 || j >= dim_ || s < 0 || s >= dim_)
    throw input_error("module constant index out of range");
}

void PoissonModuleStructure::set_assoc(int i, int j, int s, const Scalar& c) {
  check_indices(i, j, s);
  auto key = std::array<int, 3>{i, j, s};
  auto it = gamma_.find(key);
  if (it != gamma_.end() && it->second != c)
    throw input_error("inconsistent duplicate module entry");
  if (!c.is_zero()) gamma_.emplace(key, c);
}

void PoissonModuleStructure::set_lie(int i, int j, int s, const Scalar& c) {
  check_indices(i, j, s);
  auto key = std::array<int, 3>{i, j, s};
  auto it = omega_.find(key);
  if (it != omega_.end() && it->second != c)
    throw input_error("inconsistent duplicate module entry");
  if (!c.is_zero()) omega_.emplace(key, c);
}

Scalar PoissonModuleStructure::assoc(int i, int j, int s) const {
  auto it = gamma_.find({i, j, s});
  return it == gamma_.end() ? Scalar::zero(base_.field()) : it->second;
}

Scalar PoissonModuleStructure::lie(int i, int j, int s) const {
  auto it = omega_.find({i, j, s});
  return it == omega_.end() ? Scalar::zero(base_.field()) : it->second;
}

std::vector<AxiomFailure> verify_poisson_module(const PoissonModuleStructure& m) {
  std::vector<AxiomFailure> failures;
  const PoissonStructure& p = m.base();
  const int n = p.dim();
  const int md = m.dim();
  const Scalar zero = Scalar::zero(p.field());
  auto report = [&](const char* axiom, int i, int j, int k, int s, const Scalar& defect) {
    if (!defect.is_zero())
      failures.push_back(AxiomFailure{axiom, {i + 1, j + 1, k + 1}, s + 1, defect});
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < md; ++k)
        for (int s = 0; s < md; ++s) {
          // (e_i e_j) |> u_k = e_i |> (e_j |> u_k)
          Scalar lhs = zero, rhs = zero;
          for (int u = 0; u < n; ++u) lhs = lhs + p.tau(i, j, u) * m.assoc(u, k, s);
          for (int t = 0; t < md; ++t) rhs = rhs + m.assoc(j, k, t) * m.assoc(i, t, s);
          report("assoc-action", i, j, k, s, lhs - rhs);
          // [e_i, e_j] ~> u_k = e_i ~> (e_j ~> u_k) - e_j ~> (e_i ~> u_k)
          lhs = zero; rhs = zero;
          for (int u = 0; u < n; ++u) lhs = lhs + p.mu(i, j, u) * m.lie(u, k, s);
          for (int t = 0; t < md; ++t)
            rhs = rhs + m.lie(j, k, t) * m.lie(i, t, s) - m.lie(i, k, t) * m.lie(j, t, s);
          report("lie-action", i, j, k, s, lhs - rhs);
          // (Pmod1): (e_i e_j) ~> u_k = e_i |> (e_j ~> u_k) + e_j |> (e_i ~> u_k)
          lhs = zero; rhs = zero;
          for (int u = 0; u < n; ++u) lhs = lhs + p.tau(i, j, u) * m.lie(u, k, s);
          for (int t = 0; t < md; ++t)
            rhs = rhs + m.lie(j, k, t) * m.assoc(i, t, s) + m.lie(i, k, t) * m.assoc(j, t, s);
          report("Pmod1", i, j, k, s, lhs - rhs);
          // (Pmod2): [e_i, e_j] |> u_k = e_i ~> (e_j |> u_k) - e_j ~> (e_i |> u_k)
          lhs = zero; rhs = zero;
          for (int u = 0; u < n; ++u) lhs = lhs + p.mu(i, j, u) * m.assoc(u, k, s);
          for (int t = 0; t < md; ++t)
            rhs = rhs + m.assoc(j, k, t) * m.lie(i, t, s) - m.assoc(i, k, t) * m.lie(j, t, s);
          report("Pmod2", i, j, k, s, lhs - rhs);
        }
  return failures;
}

}  // namespace puniv
