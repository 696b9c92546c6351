#include "puniv/gradings.hpp"

#include <algorithm>
#include <map>

namespace puniv {

namespace {

ScalarMatrix rows_to_matrix(const std::vector<std::vector<Scalar>>& rows, int cols,
                            const Field& field) {
  ScalarMatrix m(ScalarRing(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw input_error("basis vector has the wrong length");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::size_t total_dim(const Grading& g) {
  std::size_t d = 0;
  for (const auto& c : g.components) d += c.size();
  return d;
}

/// Stack all component bases and require full independent rank n.
void require_direct_sum(const PoissonStructure& p, const Grading& g) {
  if (g.field != p.field() || g.dim != p.dim())
    throw input_error("grading does not match the algebra");
  if (g.components.size() != g.group.size())
    throw input_error("grading needs one component per group element");
  std::size_t d = total_dim(g);
  std::vector<std::vector<Scalar>> all;
  for (const auto& c : g.components)
    for (const auto& row : c) all.push_back(row);
  if (d != static_cast<std::size_t>(p.dim()) ||
      rref(rows_to_matrix(all, p.dim(), p.field())).rank != d)
    throw input_error("components do not form a direct-sum decomposition");
}

}  // namespace

std::string Grading::canonical_key() const {
  std::string key;
  for (std::size_t gi = 0; gi < components.size(); ++gi) {
    key += std::to_string(gi) + ":";
    for (const auto& row : components[gi]) {
      key += "[";
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) key += ",";
        key += row[j].str();
      }
      key += "]";
    }
    key += ";";
  }
  return key;
}

bool Grading::operator==(const Grading& o) const {
  return group == o.group && field == o.field && dim == o.dim && components == o.components;
}

Grading make_grading(FiniteAbelianGroup group, Field field, int dim,
                     std::vector<std::vector<std::vector<Scalar>>> spans) {
  if (spans.size() != group.size())
    throw input_error("grading needs one component per group element");
  Grading g{std::move(group), std::move(field), dim, {}};
  g.components.reserve(spans.size());
  for (auto& span : spans) {
    if (span.empty()) {
      g.components.emplace_back();
      continue;
    }
    g.components.push_back(row_space_basis(rows_to_matrix(span, dim, g.field)));
  }
  return g;
}

bool verify_grading(const PoissonStructure& p, const Grading& g) {
  require_direct_sum(p, g);
  const int n = p.dim();
  std::vector<FiniteAbelianGroup::Elem> elems = g.group.elements();
  auto coords_in = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y, bool bracket) {
    // coordinates of x*y resp. [x, y]
    std::vector<Scalar> out(n, Scalar::zero(p.field()));
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        Scalar c = x[i] * y[j];
        for (int s = 0; s < n; ++s) {
          Scalar t = bracket ? p.mu(i, j, s) : p.tau(i, j, s);
          if (!t.is_zero()) out[s] = out[s] + c * t;
        }
      }
    }
    return out;
  };
  for (std::size_t si = 0; si < elems.size(); ++si)
    for (std::size_t ti = 0; ti < elems.size(); ++ti) {
      std::size_t target = g.group.index_of(g.group.mul(elems[si], elems[ti]));
      for (const auto& x : g.components[si])
        for (const auto& y : g.components[ti])
          for (bool bracket : {false, true}) {
            std::vector<Scalar> v = coords_in(x, y, bracket);
            if (!in_row_span(g.components[target], v, p.field())) return false;
          }
    }
  return true;
}

ScalarMatrix GroupAlgebraBialgebraMap::component(const FiniteAbelianGroup::Elem& sigma) const {
  ScalarMatrix m(ScalarRing(theta.ring().field), theta.rows(), theta.cols());
  for (std::size_t i = 0; i < theta.rows(); ++i)
    for (std::size_t j = 0; j < theta.cols(); ++j)
      m.at(i, j) = theta.at(i, j).coefficient(sigma);
  return m;
}

std::vector<LawFailure> verify_bialgebra_map(const UniversalPresentation& u,
                                             const GroupAlgebraBialgebraMap& m) {
  std::vector<LawFailure> failures;
  const int n = u.P().dim();
  if (u.P().dim() != u.Q().dim() || !(u.P() == u.Q()))
    throw input_error("bialgebra maps need the square presentation P(P)");
  if (m.theta.rows() != static_cast<std::size_t>(n) ||
      m.theta.cols() != static_cast<std::size_t>(n))
    throw input_error("theta must be " + std::to_string(n) + "x" + std::to_string(n));
  std::vector<FiniteAbelianGroup::Elem> elems = m.group.elements();
  std::vector<ScalarMatrix> comps;
  comps.reserve(elems.size());
  for (const auto& e : elems) comps.push_back(m.component(e));
  ScalarRing ring(u.ctx()->field);
  // counit side: sum of components is the identity
  ScalarMatrix sum(ring, n, n);
  for (const auto& c : comps) sum = sum + c;
  if (sum != ScalarMatrix::identity(ring, n))
    failures.push_back({"counit", "sum of coefficient matrices"});
  // comultiplication side: orthogonal idempotents
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = 0; b < comps.size(); ++b) {
      ScalarMatrix prod = comps[a] * comps[b];
      bool ok = a == b ? prod == comps[a]
                       : [&] {
                           for (std::size_t i = 0; i < prod.rows(); ++i)
                             for (std::size_t j = 0; j < prod.cols(); ++j)
                               if (!prod.at(i, j).is_zero()) return false;
                           return true;
                         }();
      if (!ok)
        failures.push_back({"comultiplication", m.group.elem_str(elems[a]) + "*" +
                                                    m.group.elem_str(elems[b])});
    }
  // algebra-map side: theta kills the relation ideal
  try {
    gamma(m.theta, u);
  } catch (const substitution_error& e) {
    failures.push_back({"relation", e.what()});
  }
  return failures;
}

Grading grading_from_theta(const UniversalPresentation& u, const GroupAlgebraBialgebraMap& m) {
  std::vector<LawFailure> bad = verify_bialgebra_map(u, m);
  if (!bad.empty())
    throw input_error("not a bialgebra map to the group algebra: " + bad.front().str());
  const int n = u.P().dim();
  const Field& f = u.ctx()->field;
  std::vector<std::vector<std::vector<Scalar>>> spans;
  for (const auto& sigma : m.group.elements()) {
    ScalarMatrix c = m.component(sigma);
    // column space: transpose, then row-reduce
    std::vector<std::vector<Scalar>> cols;
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> col;
      col.reserve(n);
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        col.push_back(c.at(i, j));
        nonzero = nonzero || !c.at(i, j).is_zero();
      }
      if (nonzero) cols.push_back(std::move(col));
    }
    spans.push_back(std::move(cols));
  }
  return make_grading(m.group, f, n, std::move(spans));
}

GroupAlgebraBialgebraMap theta_from_grading(const UniversalPresentation& u, const Grading& g) {
  if (!verify_grading(u.P(), g))
    throw input_error("the decomposition is not a Poisson grading");
  const int n = u.P().dim();
  const Field& f = u.ctx()->field;
  ScalarRing ring(f);
  // change of basis: columns are the component basis vectors in group order
  ScalarMatrix b(ring, n, n);
  std::vector<std::size_t> owner;  // column -> group element index
  std::size_t col = 0;
  for (std::size_t gi = 0; gi < g.components.size(); ++gi)
    for (const auto& row : g.components[gi]) {
      for (int i = 0; i < n; ++i) b.at(i, col) = row[i];
      owner.push_back(gi);
      ++col;
    }
  std::optional<ScalarMatrix> binv = invert(b);
  if (!binv) throw input_error("components do not form a direct-sum decomposition");
  GroupAlgebraRing kg(g.group, f);
  Matrix<GroupAlgebraRing> theta(kg, n, n);
  std::vector<FiniteAbelianGroup::Elem> elems = g.group.elements();
  for (std::size_t gi = 0; gi < elems.size(); ++gi) {
    // projector onto the gi-block: B D B^{-1}
    ScalarMatrix d(ring, n, n);
    for (std::size_t c2 = 0; c2 < owner.size(); ++c2)
      if (owner[c2] == gi) d.at(c2, c2) = Scalar::one(f);
    ScalarMatrix proj = b * d * *binv;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (proj.at(i, j).is_zero()) continue;
        theta.at(i, j) = theta.at(i, j) +
                         GroupAlgebraElement::monomial(g.group, f, elems[gi], proj.at(i, j));
      }
  }
  GroupAlgebraBialgebraMap out{g.group, std::move(theta)};
  std::vector<LawFailure> bad = verify_bialgebra_map(u, out);
  if (!bad.empty())
    throw std::logic_error("projector family of a valid grading failed: " + bad.front().str());
  return out;
}

std::vector<std::vector<std::vector<Scalar>>> all_subspaces(const Field& field, int n) {
  if (field.is_rational()) throw input_error("subspace enumeration needs a finite field");
  const std::uint32_t p = field.characteristic();
  std::vector<std::vector<std::vector<Scalar>>> out;
  out.emplace_back();  // the zero space
  // enumerate RREF matrices: rank r, pivot columns, free entries
  for (int r = 1; r <= n; ++r) {
    std::vector<int> pivots(r);
    // iterate over r-subsets of columns in lexicographic order
    for (int i = 0; i < r; ++i) pivots[i] = i;
    while (true) {
      // free positions: row i, column c > pivots[i], c not a pivot
      std::vector<std::pair<int, int>> free_pos;
      for (int i = 0; i < r; ++i)
        for (int c = pivots[i] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_pos.emplace_back(i, c);
      std::vector<std::uint32_t> fill(free_pos.size(), 0);
      while (true) {
        std::vector<std::vector<Scalar>> rows(
            r, std::vector<Scalar>(n, Scalar::zero(field)));
        for (int i = 0; i < r; ++i) rows[i][pivots[i]] = Scalar::one(field);
        for (std::size_t k = 0; k < free_pos.size(); ++k)
          rows[free_pos[k].first][free_pos[k].second] = Scalar::from_residue(field, fill[k]);
        out.push_back(std::move(rows));
        // odometer
        std::size_t k = fill.size();
        while (k > 0) {
          --k;
          if (++fill[k] < p) break;
          fill[k] = 0;
          if (k == 0) goto next_pivots;
        }
        if (fill.empty()) break;
      }
    next_pivots:
      int i = r - 1;
      while (i >= 0 && pivots[i] == n - r + i) --i;
      if (i < 0) break;
      ++pivots[i];
      for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

namespace {

mpz_class gaussian_factorial(int n, std::uint32_t p) {
  // [n]_p! = prod_{k=1..n} (p^k - 1)/(p - 1)
  mpz_class out = 1;
  mpz_class pk = 1;
  for (int k = 1; k <= n; ++k) {
    pk *= p;
    out *= (pk - 1) / (p - 1);
  }
  return out;
}

/// Exact number of ordered direct-sum decompositions of F_p^n into `parts`
/// (possibly zero) summands.
mpz_class decomposition_count(int n, std::uint32_t p, std::size_t parts) {
  mpz_class total = 0;
  std::vector<int> dims(parts, 0);
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx + 1 == parts) {
      dims[idx] = remaining;
      mpz_class term = gaussian_factorial(n, p);
      for (int d : dims) term /= gaussian_factorial(d, p);
      long cross = 0;
      for (std::size_t a = 0; a < parts; ++a)
        for (std::size_t b = a + 1; b < parts; ++b) cross += static_cast<long>(dims[a]) * dims[b];
      mpz_class pc;
      mpz_ui_pow_ui(pc.get_mpz_t(), p, static_cast<unsigned long>(cross));
      total += term * pc;
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      dims[idx] = d;
      self(self, idx + 1, remaining - d);
    }
  };
  rec(rec, 0, n);
  return total;
}

}  // namespace

std::vector<Grading> enumerate_gradings(const PoissonStructure& p, const FiniteAbelianGroup& G,
                                        std::uint64_t guard) {
  const Field& f = p.field();
  if (f.is_rational()) throw input_error("grading enumeration needs a finite field");
  if (guard > kMaxEnumGuard) guard = kMaxEnumGuard;
  const int n = p.dim();
  const std::size_t parts = static_cast<std::size_t>(G.size());
  mpz_class count = decomposition_count(n, f.characteristic(), parts);
  if (count > guard)
    throw guard_error("decomposition count " + count.get_str() +
                      " exceeds the enumeration guard " + std::to_string(guard));
  std::vector<std::vector<std::vector<Scalar>>> spaces = all_subspaces(f, n);
  std::vector<Grading> found;
  std::vector<std::vector<std::vector<Scalar>>> chosen(parts);
  std::vector<std::vector<Scalar>> stacked;
  auto rec = [&](auto&& self, std::size_t gi, int used) -> void {
    if (gi == parts) {
      if (used != n) return;
      Grading g{G, f, n, chosen};
      if (verify_grading(p, g)) found.push_back(std::move(g));
      return;
    }
    for (const auto& space : spaces) {
      int d = static_cast<int>(space.size());
      if (used + d > n) continue;
      if (d > 0) {
        std::vector<std::vector<Scalar>> test = stacked;
        for (const auto& row : space) test.push_back(row);
        if (rref(rows_to_matrix(test, n, f)).rank != test.size()) continue;
        std::size_t mark = stacked.size();
        for (const auto& row : space) stacked.push_back(row);
        chosen[gi] = space;
        self(self, gi + 1, used + d);
        stacked.resize(mark);
        chosen[gi].clear();
      } else {
        chosen[gi].clear();
        self(self, gi + 1, used);
      }
    }
  };
  rec(rec, 0, 0);
  std::sort(found.begin(), found.end(), [](const Grading& a, const Grading& b) {
    return a.canonical_key() < b.canonical_key();
  });
  return found;
}

Grading transform_grading(const Grading& g, const ScalarMatrix& w) {
  std::vector<std::vector<std::vector<Scalar>>> spans;
  spans.reserve(g.components.size());
  for (const auto& comp : g.components) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(comp.size());
    for (const auto& v : comp) {
      std::vector<Scalar> img(g.dim, Scalar::zero(g.field));
      for (int s = 0; s < g.dim; ++s)
        for (int i = 0; i < g.dim; ++i) img[s] = img[s] + w.at(s, i) * v[i];
      rows.push_back(std::move(img));
    }
    spans.push_back(std::move(rows));
  }
  return make_grading(g.group, g.field, g.dim, std::move(spans));
}

GradingClassification classify_gradings(const PoissonStructure& p, const FiniteAbelianGroup& G,
                                        std::uint64_t guard) {
  GradingClassification out;
  out.gradings = enumerate_gradings(p, G, guard);
  AutomorphismGroup aut = automorphism_group(p, guard);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < out.gradings.size(); ++i)
    index[out.gradings[i].canonical_key()] = i;
  std::vector<bool> seen(out.gradings.size(), false);
  for (std::size_t i = 0; i < out.gradings.size(); ++i) {
    if (seen[i]) continue;
    // breadth-first orbit scan
    std::vector<std::size_t> orbit{i};
    seen[i] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const ScalarMatrix& w : aut.elements) {
        Grading img = transform_grading(out.gradings[orbit[k]], w);
        auto it = index.find(img.canonical_key());
        if (it == index.end())
          throw std::logic_error("automorphism image of a grading is not a grading");
        if (!seen[it->second]) {
          seen[it->second] = true;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(GradingOrbit{orbit.front(), std::move(orbit)});
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const GradingOrbit& a, const GradingOrbit& b) {
              return a.representative < b.representative;
            });
  return out;
}

}  // namespace puniv
