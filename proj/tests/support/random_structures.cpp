#include "support/random_structures.hpp"

#include <stdexcept>
#include <vector>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace randgen {

using puniv::ScalarRing;

Scalar random_scalar(Rng& rng, const Field& f, bool nonzero) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    int a = num(rng);
    if (nonzero && a == 0) a = 1;
    Scalar s = Scalar::from_int(f, a);
    return s / Scalar::from_int(f, den(rng));
  }
  std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1 : 0,
                                                    f.characteristic() - 1);
  return Scalar::from_residue(f, dist(rng));
}

std::pair<ScalarMatrix, ScalarMatrix> random_invertible(Rng& rng, const Field& f, int n) {
  ScalarRing ring(f);
  ScalarMatrix t = ScalarMatrix::identity(ring, static_cast<std::size_t>(n));
  ScalarMatrix t_inv = t;
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> steps_dist(1, 3);
  int steps = steps_dist(rng);
  for (int k = 0; k < steps; ++k) {
    std::uniform_int_distribution<int> kind_dist(0, 2);
    int kind = kind_dist(rng);
    ScalarMatrix e = ScalarMatrix::identity(ring, static_cast<std::size_t>(n));
    ScalarMatrix e_inv = e;
    if (kind == 0 && n > 1) {  // transposition
      int a = idx(rng), b = idx(rng);
      if (a == b) b = (b + 1) % n;
      std::swap(e.at(a, a), e.at(a, b));
      std::swap(e.at(b, b), e.at(b, a));
      e_inv = e;
    } else if (kind == 1) {  // scaling
      int a = idx(rng);
      Scalar c = random_scalar(rng, f, /*nonzero=*/true);
      e.at(a, a) = c;
      e_inv.at(a, a) = c.inverse();
    } else if (n > 1) {  // shear
      int a = idx(rng), b = idx(rng);
      if (a == b) b = (b + 1) % n;
      Scalar c = random_scalar(rng, f);
      e.at(a, b) = c;
      e_inv.at(a, b) = -c;
    }
    t = t * e;
    t_inv = e_inv * t_inv;
  }
  return {t, t_inv};
}

PoissonStructure random_poisson(Rng& rng, const Field& f, int max_dim) {
  std::vector<PoissonStructure> pool;
  std::uniform_int_distribution<int> dim_dist(1, max_dim);
  pool.push_back(fixtures::abelian(f, dim_dist(rng)));
  pool.push_back(fixtures::truncated_poly(f, dim_dist(rng)));
  pool.push_back(fixtures::split_idempotents(f, dim_dist(rng)));
  pool.push_back(fixtures::cyclic_group_algebra(f, dim_dist(rng)));
  if (max_dim >= 2) {
    pool.push_back(fixtures::dual_numbers(f));
    pool.push_back(fixtures::aff2(f));
  }
  if (max_dim >= 3) {
    pool.push_back(fixtures::heisenberg(f));
    if (f.characteristic() != 2) pool.push_back(fixtures::sl2(f));
    // e1^2 = lambda e2, [e1, e3] = nu e3
    PoissonStructure fam(f, 3);
    fam.set_product(0, 0, 1, random_scalar(rng, f, /*nonzero=*/true));
    fam.set_bracket(0, 2, 2, random_scalar(rng, f, /*nonzero=*/true));
    pool.push_back(std::move(fam));
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  PoissonStructure base = pool[pick(rng)];
  auto [t, t_inv] = random_invertible(rng, base.field(), base.dim());
  PoissonStructure out = oracles::transform_structure(base, t, t_inv);
  if (!puniv::verify_poisson(out).empty())
    throw std::logic_error("random_poisson produced an invalid structure");
  return out;
}

namespace {

/// All valid one-dimensional modules over p (finite field): scalar tables
/// gamma[i], omega[i] filtered by the module axioms.
std::vector<PoissonModuleStructure> one_dim_modules(const PoissonStructure& p) {
  const Field& f = p.field();
  const int n = p.dim();
  const std::uint32_t ch = f.characteristic();
  std::vector<PoissonModuleStructure> out;
  std::vector<std::uint32_t> vals(static_cast<std::size_t>(2 * n), 0);
  while (true) {
    PoissonModuleStructure m(p, 1);
    for (int i = 0; i < n; ++i) {
      if (vals[static_cast<std::size_t>(i)])
        m.set_assoc(i, 0, 0, Scalar::from_residue(f, vals[static_cast<std::size_t>(i)]));
      if (vals[static_cast<std::size_t>(n + i)])
        m.set_lie(i, 0, 0, Scalar::from_residue(f, vals[static_cast<std::size_t>(n + i)]));
    }
    if (puniv::verify_poisson_module(m).empty()) out.push_back(std::move(m));
    int pos = 2 * n - 1;
    while (pos >= 0 && vals[static_cast<std::size_t>(pos)] + 1 == ch) {
      vals[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++vals[static_cast<std::size_t>(pos)];
  }
  return out;
}

PoissonModuleStructure direct_sum(const PoissonModuleStructure& a,
                                  const PoissonModuleStructure& b) {
  PoissonModuleStructure out(a.base(), a.dim() + b.dim());
  const int n = a.base().dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < a.dim(); ++j)
      for (int s = 0; s < a.dim(); ++s) {
        if (!a.assoc(i, j, s).is_zero()) out.set_assoc(i, j, s, a.assoc(i, j, s));
        if (!a.lie(i, j, s).is_zero()) out.set_lie(i, j, s, a.lie(i, j, s));
      }
    for (int j = 0; j < b.dim(); ++j)
      for (int s = 0; s < b.dim(); ++s) {
        if (!b.assoc(i, j, s).is_zero())
          out.set_assoc(i, a.dim() + j, a.dim() + s, b.assoc(i, j, s));
        if (!b.lie(i, j, s).is_zero())
          out.set_lie(i, a.dim() + j, a.dim() + s, b.lie(i, j, s));
      }
  }
  return out;
}

PoissonModuleStructure regular_module(const PoissonStructure& p) {
  PoissonModuleStructure m(p, p.dim());
  for (const auto& [key, c] : p.tau_map()) m.set_assoc(key[0], key[1], key[2], c);
  for (const auto& [key, c] : p.mu_map()) m.set_lie(key[0], key[1], key[2], c);
  return m;
}

}  // namespace

PoissonModuleStructure random_module(Rng& rng, const PoissonStructure& p, int max_dim) {
  std::vector<PoissonModuleStructure> pool;
  std::uniform_int_distribution<int> dim_dist(1, max_dim);
  pool.push_back(PoissonModuleStructure(p, dim_dist(rng)));  // trivial
  if (p.dim() <= max_dim) pool.push_back(regular_module(p));
  if (!p.field().is_rational()) {
    std::vector<PoissonModuleStructure> lines = one_dim_modules(p);
    std::uniform_int_distribution<std::size_t> pick(0, lines.size() - 1);
    pool.push_back(lines[pick(rng)]);
    if (max_dim >= 2) pool.push_back(direct_sum(lines[pick(rng)], lines[pick(rng)]));
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  PoissonModuleStructure base = pool[pick(rng)];
  auto [t, t_inv] = random_invertible(rng, p.field(), base.dim());
  PoissonModuleStructure out = oracles::transform_module(base, t, t_inv);
  if (!puniv::verify_poisson_module(out).empty())
    throw std::logic_error("random_module produced an invalid module");
  return out;
}

AModuleStructure random_amodule(Rng& rng, std::shared_ptr<const UniversalPresentation> algebra,
                                int max_dim) {
  std::vector<ScalarMatrix> chars = puniv::enumerate_algebra_maps(*algebra);
  if (chars.empty()) throw std::logic_error("random_amodule: presentation has no characters");
  const Field& f = algebra->ctx()->field;
  ScalarRing ring(f);
  std::uniform_int_distribution<std::size_t> pick(0, chars.size() - 1);
  std::uniform_int_distribution<int> dim_dist(1, max_dim);
  const int d = dim_dist(rng);
  std::vector<std::size_t> which;
  for (int k = 0; k < d; ++k) which.push_back(pick(rng));
  std::vector<ScalarMatrix> actions;
  const int n = algebra->P().dim();
  const int m = algebra->Q().dim();
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < m; ++i) {
      ScalarMatrix a(ring, static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k)
        a.at(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) =
            chars[which[static_cast<std::size_t>(k)]].at(static_cast<std::size_t>(s),
                                                         static_cast<std::size_t>(i));
      actions.push_back(std::move(a));
    }
  auto [t, t_inv] = random_invertible(rng, f, d);
  for (ScalarMatrix& a : actions) a = t_inv * a * t;
  AModuleStructure out(std::move(algebra), d, std::move(actions));
  if (!out.verify().empty())
    throw std::logic_error("random_amodule produced an invalid module");
  return out;
}

}  // namespace randgen
