#ifndef PUNIV_POISSON_HPP
#define PUNIV_POISSON_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "puniv/matrix.hpp"
#include "puniv/scalar.hpp"

namespace puniv {

/// One violated axiom instance: which law, at which basis indices, in which
/// output component, and by how much.
struct AxiomFailure {
  std::string axiom;          ///< "commutativity", "associativity", "antisymmetry",
                              ///< "jacobi", "leibniz", "unit", "assoc-action",
                              ///< "lie-action", "Pmod1", "Pmod2"
  std::array<int, 3> indices; ///< 1-based basis indices (unused slots are 0)
  int component;              ///< 1-based output component
  Scalar defect;
  std::string str() const;
};

/// A finite-dimensional Poisson algebra given by structure constants on a
/// fixed basis e_1..e_n: products e_i e_j = sum_s tau[i][j][s] e_s and
/// brackets [e_i, e_j] = sum_s mu[i][j][s] e_s.  Constants are stored fully
/// completed (both index orders); the named constructors enforce the
/// symmetric/antisymmetric completion so redundant input cannot disagree.
class PoissonStructure {
public:
  /// Completion-safe builder: product entries with i <= j, bracket entries
  /// with i < j, all 0-based.  Inconsistent duplicates are input errors.
  PoissonStructure(Field field, int dim,
                   std::optional<int> unit_index = std::nullopt,
                   std::vector<std::string> basis_labels = {});

  void set_product(int i, int j, int s, const Scalar& c);   ///< requires i <= j
  void set_bracket(int i, int j, int s, const Scalar& c);   ///< requires i < j

  /// Escape hatch for tests and diagnostics: raw constant maps, no
  /// completion, so verify_poisson can exhibit asymmetric inputs.
  static PoissonStructure from_raw(Field field, int dim,
                                   std::map<std::array<int, 3>, Scalar> tau,
                                   std::map<std::array<int, 3>, Scalar> mu,
                                   std::optional<int> unit_index = std::nullopt);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  const std::optional<int>& unit_index() const { return unit_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  Scalar tau(int i, int j, int s) const;  ///< coefficient of e_s in e_i e_j
  Scalar mu(int i, int j, int s) const;   ///< coefficient of e_s in [e_i, e_j]
  const std::map<std::array<int, 3>, Scalar>& tau_map() const { return tau_; }
  const std::map<std::array<int, 3>, Scalar>& mu_map() const { return mu_; }

  /// Coordinates of e_i e_j resp. [e_i, e_j].
  std::vector<Scalar> product_coords(int i, int j) const;
  std::vector<Scalar> bracket_coords(int i, int j) const;

  bool operator==(const PoissonStructure& o) const;

private:
  void check_indices(int i, int j, int s) const;
  Field field_;
  int dim_;
  std::vector<std::string> labels_;
  std::map<std::array<int, 3>, Scalar> tau_, mu_;
  std::optional<int> unit_;
};

/// Checks commutativity, associativity, antisymmetry (including vanishing
/// diagonal), Jacobi and Leibniz on all basis triples, plus the two-sided
/// unit law when a unit index is declared.  Empty report == Poisson algebra.
std::vector<AxiomFailure> verify_poisson(const PoissonStructure& p);

/// A Poisson module over p: an n x m x m pair of action constant tables,
/// e_i |> u_j = sum_s assoc[i][j][s] u_s (associative action) and
/// e_i ~> u_j = sum_s lie[i][j][s] u_s (Lie action).
class PoissonModuleStructure {
public:
  PoissonModuleStructure(PoissonStructure base, int dim);

  void set_assoc(int i, int j, int s, const Scalar& c);
  void set_lie(int i, int j, int s, const Scalar& c);

  const PoissonStructure& base() const { return base_; }
  int dim() const { return dim_; }
  Scalar assoc(int i, int j, int s) const;
  Scalar lie(int i, int j, int s) const;
  const std::map<std::array<int, 3>, Scalar>& assoc_map() const { return gamma_; }
  const std::map<std::array<int, 3>, Scalar>& lie_map() const { return omega_; }

private:
  void check_indices(int i, int j, int s) const;
  PoissonStructure base_;
  int dim_;
  std::map<std::array<int, 3>, Scalar> gamma_, omega_;
};

/// Checks the associative-action, Lie-action and the two Poisson
/// compatibility laws (Pmod1), (Pmod2) on all basis triples.
std::vector<AxiomFailure> verify_poisson_module(const PoissonModuleStructure& m);

/// Is the A-linear extension of g: Q -> P (x) A, given column-wise by the
/// n x m matrix d (g(f_i) = sum_s e_s (x) d(s,i)), a morphism of Poisson
/// algebras?  Verified against the structure constants of both sides inside
/// the ring A.  With `unital` set, both algebras must declare units and
/// g(1_Q) = 1_P (x) 1_A is required as well.
template <class Ring>
bool check_poisson_morphism(const Matrix<Ring>& d, const PoissonStructure& q,
                            const PoissonStructure& p, bool unital = false) {
  const int n = p.dim();
  const int m = q.dim();
  if (d.rows() != static_cast<std::size_t>(n) || d.cols() != static_cast<std::size_t>(m))
    throw input_error("morphism matrix must be " + std::to_string(n) + "x" + std::to_string(m) +
                      ", got " + d.shape());
  if (p.field() != q.field())
    throw input_error("morphism between algebras over different fields");
  const Ring& ring = d.ring();
  auto condition = [&](bool bracket) {
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          typename Ring::Element lhs = ring.zero();
          for (int u = 0; u < m; ++u) {
            Scalar c = bracket ? q.mu(i, j, u) : q.tau(i, j, u);
            if (c.is_zero()) continue;
            lhs = ring.add(lhs, ring.mul(ring.from_scalar(c), d.at(a, u)));
          }
          typename Ring::Element rhs = ring.zero();
          for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
              Scalar c = bracket ? p.mu(s, t, a) : p.tau(s, t, a);
              if (c.is_zero()) continue;
              rhs = ring.add(rhs, ring.mul(ring.from_scalar(c), ring.mul(d.at(s, i), d.at(t, j))));
            }
          if (!ring.is_zero(ring.sub(lhs, rhs))) return false;
        }
    return true;
  };
  if (!condition(false) || !condition(true)) return false;
  if (unital) {
    if (!p.unit_index() || !q.unit_index())
      throw input_error("unital morphism check needs unit indices on both algebras");
    int ip = *p.unit_index();
    int iq = *q.unit_index();
    for (int s = 0; s < n; ++s) {
      typename Ring::Element want = s == ip ? ring.one() : ring.zero();
      if (!ring.equal(d.at(s, iq), want)) return false;
    }
  }
  return true;
}

}  // namespace puniv

#endif
