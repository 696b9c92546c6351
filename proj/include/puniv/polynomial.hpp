#ifndef PUNIV_POLYNOMIAL_HPP
#define PUNIV_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "puniv/scalar.hpp"

namespace puniv {

enum class TermOrder { degrevlex, lex };

TermOrder parse_term_order(const std::string& name);  ///< "degrevlex" | "lex"
std::string term_order_name(TermOrder o);

/// Exponent vector over a fixed variable list, total degree cached.
struct Monomial {
  std::vector<std::uint32_t> exps;
  std::uint64_t degree = 0;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  static Monomial unit(std::size_t nvars) { return Monomial(nvars); }
  static Monomial var(std::size_t nvars, std::size_t idx, std::uint32_t e = 1);

  bool is_unit() const { return degree == 0; }
  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// Three-way comparison under a term order.  Variables are ranked ascending
/// by index: x_0 < x_1 < ... regardless of order choice.
int mono_compare(const Monomial& a, const Monomial& b, TermOrder order);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  ///< a | b
Monomial mono_quotient(const Monomial& b, const Monomial& a);  ///< b / a, precondition a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Shared ring context: coefficient field, named variables, term order.
/// Polynomials are compatible when their contexts agree structurally.
struct PolyContext {
  Field field;
  std::vector<std::string> vars;
  TermOrder order;

  PolyContext(Field f, std::vector<std::string> v, TermOrder o)
      : field(std::move(f)), vars(std::move(v)), order(o) {}
  std::size_t nvars() const { return vars.size(); }
  bool same_ring(const PolyContext& o) const {
    return field == o.field && vars == o.vars;
  }
  bool compatible(const PolyContext& o) const {
    return same_ring(o) && order == o.order;
  }
};

using CtxPtr = std::shared_ptr<const PolyContext>;

CtxPtr make_context(Field f, std::vector<std::string> vars,
                    TermOrder order = TermOrder::degrevlex);

/// Sparse multivariate polynomial; terms kept sorted descending under the
/// context's order, so terms().front() is the leading term.
class Polynomial {
public:
  using Term = std::pair<Monomial, Scalar>;

  explicit Polynomial(CtxPtr ctx) : ctx_(std::move(ctx)) {}
  static Polynomial zero(CtxPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(CtxPtr ctx, const Scalar& c);
  static Polynomial variable(CtxPtr ctx, std::size_t idx);
  static Polynomial term(CtxPtr ctx, Monomial m, const Scalar& c);
  /// Builds from an unsorted term list (duplicates combined, zeros dropped).
  static Polynomial from_terms(CtxPtr ctx, std::vector<Term> terms);

  const CtxPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;
  std::uint64_t total_degree() const;  ///< 0 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial monic() const;  ///< leading coefficient scaled to 1

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Same polynomial re-sorted for a context with a different order (ring
  /// must match structurally).
  Polynomial with_context(const CtxPtr& ctx) const;

  std::string str() const;

private:
  void check_compatible(const Polynomial& o) const;
  CtxPtr ctx_;
  std::vector<Term> terms_;
};

/// Deterministic ordering of whole polynomials (by leading terms, then deeper
/// terms, then length); used to present bases canonically.
bool poly_less(const Polynomial& a, const Polynomial& b);

std::string mono_str(const Monomial& m, const PolyContext& ctx);

}  // namespace puniv

#endif
