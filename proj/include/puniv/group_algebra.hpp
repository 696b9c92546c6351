#ifndef PUNIV_GROUP_ALGEBRA_HPP
#define PUNIV_GROUP_ALGEBRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "puniv/scalar.hpp"

namespace puniv {

/// Finite abelian group presented as Z/m1 x ... x Z/mk; elements are residue
/// tuples and the operation is written multiplicatively (the identity is the
/// zero tuple).
struct FiniteAbelianGroup {
  std::vector<std::uint32_t> orders;

  using Elem = std::vector<std::uint32_t>;

  explicit FiniteAbelianGroup(std::vector<std::uint32_t> m);

  std::uint64_t size() const;
  Elem identity() const { return Elem(orders.size(), 0); }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inverse(const Elem& a) const;
  /// All elements in lexicographic tuple order (the canonical enumeration).
  std::vector<Elem> elements() const;
  std::size_t index_of(const Elem& e) const;

  bool operator==(const FiniteAbelianGroup& o) const { return orders == o.orders; }
  std::string str() const;                  ///< "Z2xZ4"
  std::string elem_str(const Elem& e) const;  ///< "(1,3)"

  static FiniteAbelianGroup parse(const std::string& text);  ///< "Z2", "Z2xZ4", ...
};

/// Element of the group algebra k[G]: a finite k-linear combination of group
/// elements, terms sorted by the canonical element order.
class GroupAlgebraElement {
public:
  using Term = std::pair<FiniteAbelianGroup::Elem, Scalar>;

  GroupAlgebraElement(FiniteAbelianGroup g, Field f)
      : group_(std::move(g)), field_(std::move(f)) {}

  static GroupAlgebraElement zero(const FiniteAbelianGroup& g, const Field& f);
  static GroupAlgebraElement one(const FiniteAbelianGroup& g, const Field& f);
  /// c * sigma for a single group element.
  static GroupAlgebraElement monomial(const FiniteAbelianGroup& g, const Field& f,
                                      const FiniteAbelianGroup::Elem& sigma,
                                      const Scalar& c);

  const FiniteAbelianGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const FiniteAbelianGroup::Elem& sigma) const;

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  ///< convolution
  GroupAlgebraElement operator-() const;
  GroupAlgebraElement scaled(const Scalar& c) const;

  bool operator==(const GroupAlgebraElement& o) const;
  bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

  std::string str() const;  ///< e.g. "1*(0) + 2*(1)"

private:
  void check_same(const GroupAlgebraElement& o) const;
  void insert(const FiniteAbelianGroup::Elem& sigma, const Scalar& c);

  FiniteAbelianGroup group_;
  Field field_;
  std::vector<Term> terms_;
};

}  // namespace puniv

#endif
