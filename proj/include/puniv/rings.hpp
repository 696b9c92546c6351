#ifndef PUNIV_RINGS_HPP
#define PUNIV_RINGS_HPP

#include <string>

#include "puniv/groebner.hpp"
#include "puniv/group_algebra.hpp"
#include "puniv/polynomial.hpp"

namespace puniv {

// The matrix/evaluation templates below are generic over a small "ring
// object" interface: a commutative ring with an Element type, the usual
// operations, a scalar embedding and a normalization map that picks the
// canonical representative (identity except in quotient rings).

/// The coefficient field itself, seen as a ring of scalars.
struct ScalarRing {
  using Element = Scalar;
  Field field;

  explicit ScalarRing(Field f) : field(std::move(f)) {}
  Element zero() const { return Scalar::zero(field); }
  Element one() const { return Scalar::one(field); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element from_scalar(const Scalar& c) const { return c; }
  Element normalize(const Element& a) const { return a; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string str(const Element& a) const { return a.str(); }
  bool same_ring(const ScalarRing& o) const { return field == o.field; }
};

/// k[x_1..x_N]/I with elements stored as normal forms.
struct QuotientRing {
  using Element = Polynomial;
  CtxPtr ctx;
  IdealBasis ideal;

  QuotientRing(CtxPtr c, IdealBasis i) : ctx(std::move(c)), ideal(std::move(i)) {
    if (!ideal.ctx) ideal.ctx = ctx;
  }
  Element zero() const { return Polynomial::zero(ctx); }
  Element one() const { return Polynomial::constant(ctx, Scalar::one(ctx->field)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return normalize(a * b); }
  Element neg(const Element& a) const { return -a; }
  Element from_scalar(const Scalar& c) const { return Polynomial::constant(ctx, c); }
  Element normalize(const Element& a) const { return normal_form(a, ideal); }
  bool is_zero(const Element& a) const { return normalize(a).is_zero(); }
  bool equal(const Element& a, const Element& b) const { return is_zero(a - b); }
  std::string str(const Element& a) const { return a.str(); }
  bool same_ring(const QuotientRing& o) const { return ctx->compatible(*o.ctx); }
};

/// The group algebra k[G].
struct GroupAlgebraRing {
  using Element = GroupAlgebraElement;
  FiniteAbelianGroup group;
  Field field;

  GroupAlgebraRing(FiniteAbelianGroup g, Field f) : group(std::move(g)), field(std::move(f)) {}
  Element zero() const { return GroupAlgebraElement::zero(group, field); }
  Element one() const { return GroupAlgebraElement::one(group, field); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element from_scalar(const Scalar& c) const {
    return GroupAlgebraElement::monomial(group, field, group.identity(), c);
  }
  Element normalize(const Element& a) const { return a; }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string str(const Element& a) const { return a.str(); }
  bool same_ring(const GroupAlgebraRing& o) const {
    return group == o.group && field == o.field;
  }
};

}  // namespace puniv

#endif
