#ifndef PUNIV_GROEBNER_HPP
#define PUNIV_GROEBNER_HPP

#include <vector>

#include "puniv/polynomial.hpp"

namespace puniv {

/// A polynomial ideal carried together with its reduced Groebner basis under
/// the context's term order.  The reduced basis is monic, auto-reduced and
/// sorted ascending by leading monomial, hence a canonical presentation of
/// the ideal.  Construct through buchberger().
struct IdealBasis {
  CtxPtr ctx;
  std::vector<Polynomial> generators;  ///< the nonzero input generators
  std::vector<Polynomial> basis;       ///< reduced Groebner basis (empty for the zero ideal)

  bool is_zero_ideal() const { return basis.empty(); }
  bool is_unit_ideal() const {
    return basis.size() == 1 && basis[0].total_degree() == 0;
  }
  bool contains(const Polynomial& p) const;
};

/// Buchberger's algorithm with the product criterion and normal pair
/// selection, followed by auto-reduction to the reduced basis.  Zero
/// generators are dropped; an empty (or all-zero) input yields the zero
/// ideal.  All generators must share the context.
IdealBasis buchberger(const std::vector<Polynomial>& gens);

/// Same, but the computation runs under `order` (generators are re-sorted
/// into a fresh context first).
IdealBasis buchberger(const std::vector<Polynomial>& gens, TermOrder order);

/// Total reduction: the unique representative of p modulo the ideal in which
/// no monomial is divisible by any basis leading monomial.  The polynomial
/// must live in the ideal's ring; a mismatched term order is an error.
Polynomial normal_form(const Polynomial& p, const IdealBasis& ideal);

/// Ideal equality over the same ring: both reduced bases are recomputed
/// under a common order (the first argument's) and compared.
bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

/// Internal: wraps a basis that is already known to be a reduced Groebner
/// basis (used for block-embedded tensor ideals where recomputation is
/// provably unnecessary).  Checked with a debug assertion.
IdealBasis assume_reduced_basis(CtxPtr ctx, std::vector<Polynomial> basis);

}  // namespace puniv

#endif
