#ifndef PUNIV_UNIVERSAL_HPP
#define PUNIV_UNIVERSAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "puniv/groebner.hpp"
#include "puniv/matrix.hpp"
#include "puniv/poisson.hpp"

namespace puniv {

/// Default / hard ceiling for the finite-field enumeration guard: searches
/// touch at most guard-many assignments before pruning.
inline constexpr std::uint64_t kDefaultEnumGuard = 1ull << 24;
inline constexpr std::uint64_t kMaxEnumGuard = 1ull << 28;

enum class RelationKind { product, bracket, unital };

/// One defining relation of the universal algebra, tagged with the indices
/// it was generated from: product/bracket relations carry (a, i, j), unital
/// relations carry the generator row s (all 0-based internally).
struct UniversalRelation {
  RelationKind kind;
  int a, i, j;
  Polynomial poly;
  std::string label() const;
};

/// Row-major generator names x(s,i), s = 1..n over P, i = 1..m over Q;
/// plain "x21" while both dimensions stay single-digit, "x2_10" beyond.
std::vector<std::string> universal_var_names(int n, int m);

/// The universal coacting algebra P(P,Q) = k[x(s,i)] / J presented by a
/// reduced Groebner basis of the relation ideal J, together with the data
/// that produced it.
class UniversalPresentation {
public:
  UniversalPresentation(PoissonStructure P, PoissonStructure Q, bool unital, TermOrder order);

  const PoissonStructure& P() const { return P_; }
  const PoissonStructure& Q() const { return Q_; }
  const CtxPtr& ctx() const { return ctx_; }
  bool unital() const { return unital_; }
  /// Nonzero defining relations: all product relations in (a,i,j)-lex order,
  /// then all bracket relations, then unital generators when applicable.
  const std::vector<UniversalRelation>& relations() const { return relations_; }
  /// Count including the identically-zero ones: 2 n m^2 (+ n unital).
  std::size_t raw_relation_count() const { return raw_count_; }
  const IdealBasis& ideal() const { return ideal_; }

  std::size_t nvars() const { return ctx_->nvars(); }
  std::size_t var_index(int s, int i) const;  ///< row-major, 0-based
  QuotientRing quotient_ring() const { return QuotientRing(ctx_, ideal_); }

private:
  PoissonStructure P_, Q_;
  bool unital_;
  CtxPtr ctx_;
  std::vector<UniversalRelation> relations_;
  std::size_t raw_count_;
  IdealBasis ideal_;
};

/// The relation list alone (nonzero entries), for a caller-supplied context;
/// does not require the structures to pass verification.
std::vector<UniversalRelation> build_relations(const PoissonStructure& p,
                                               const PoissonStructure& q,
                                               const CtxPtr& ctx);

/// Builds P(P,Q) (or its unital variant P1(P,Q), which adds the generators
/// x(s, unit(Q)) - delta(s, unit(P))).  Both structures must pass
/// verify_poisson and live over one field.
UniversalPresentation universal_algebra(const PoissonStructure& p, const PoissonStructure& q,
                                        bool unital = false,
                                        TermOrder order = TermOrder::degrevlex);

/// The universal comodule map eta: Q -> P (x) P(P,Q) as the n x m matrix of
/// reduced generator classes, eta(f_i) = sum_s e_s (x) [x(s,i)].
Matrix<QuotientRing> eta(const UniversalPresentation& u);

/// Evaluates a polynomial at ring values (values[v] substitutes variable v).
template <class Ring>
typename Ring::Element evaluate_polynomial(const Polynomial& poly, const Ring& ring,
                                           const std::vector<typename Ring::Element>& values) {
  if (values.size() != poly.context()->nvars())
    throw input_error("substitution value count does not match the variable count");
  typename Ring::Element acc = ring.zero();
  for (const auto& [mono, coeff] : poly.terms()) {
    typename Ring::Element term = ring.from_scalar(coeff);
    for (std::size_t v = 0; v < mono.exps.size(); ++v)
      for (std::uint32_t e = 0; e < mono.exps[v]; ++e)
        term = ring.mul(term, values[v]);
    acc = ring.add(acc, term);
  }
  return ring.normalize(acc);
}

/// The bijection gamma: an algebra map theta: P(P,Q) -> A, given by its
/// values on generators, corresponds to the Poisson morphism
/// Q -> P (x) A with the same matrix.  Verifies that theta kills every
/// relation; throws substitution_error naming the first violated one.
template <class Ring>
LinearMapOverRing<Ring> gamma(const Matrix<Ring>& theta, const UniversalPresentation& u) {
  const std::size_t n = static_cast<std::size_t>(u.P().dim());
  const std::size_t m = static_cast<std::size_t>(u.Q().dim());
  if (theta.rows() != n || theta.cols() != m)
    throw input_error("theta must be " + std::to_string(n) + "x" + std::to_string(m) +
                      ", got " + theta.shape());
  const Ring& ring = theta.ring();
  std::vector<typename Ring::Element> values;
  values.reserve(n * m);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < m; ++i) values.push_back(ring.normalize(theta.at(s, i)));
  for (std::size_t r = 0; r < u.relations().size(); ++r) {
    const UniversalRelation& rel = u.relations()[r];
    if (!ring.is_zero(evaluate_polynomial(rel.poly, ring, values)))
      throw substitution_error("substitution does not kill relation " + rel.label(), r);
  }
  return LinearMapOverRing<Ring>(m, n, theta);
}

/// All common zeros of the presentation's relations over its (finite) field,
/// i.e. all algebra maps P(P,Q) -> F_p, as n x m scalar matrices in
/// lexicographic row-major order.  Throws guard_error when p^(n m) exceeds
/// the guard.
std::vector<ScalarMatrix> enumerate_algebra_maps(const UniversalPresentation& u,
                                                 std::uint64_t guard = kDefaultEnumGuard);

/// Hom_Poiss(Q, P) over a finite field: every morphism matrix d with
/// d(f_i) = sum_s d(s,i) e_s.  Both algebras must be over the same prime
/// field and pass verification.
std::vector<ScalarMatrix> hom_poisson(const PoissonStructure& q, const PoissonStructure& p,
                                      std::uint64_t guard = kDefaultEnumGuard);

/// Functoriality in Q: for a Poisson morphism v: Q1 -> Q2 (matrix dim Q2 x
/// dim Q1 over k) this is the induced algebra map P(P,Q1) -> P(P,Q2) on
/// generators, x1(s,i) |-> sum_j v(j,i) x2(s,j), entries reduced in the
/// target quotient.  The relation images are verified to vanish.
Matrix<QuotientRing> functorial_map(const UniversalPresentation& src,
                                    const UniversalPresentation& tgt,
                                    const ScalarMatrix& morphism);

/// Base change of structure constants into a prime field (denominators must
/// stay invertible); handy for enumerations over documents written over Q.
PoissonStructure change_field(const PoissonStructure& p, const Field& target);

}  // namespace puniv

#endif
