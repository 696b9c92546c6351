#include "puniv/polynomial.hpp"

#include <algorithm>

namespace puniv {

TermOrder parse_term_order(const std::string& name) {
  if (name == "degrevlex") return TermOrder::degrevlex;
  if (name == "lex") return TermOrder::lex;
  throw input_error("unknown term order '" + name + "' (expected degrevlex or lex)");
}

std::string term_order_name(TermOrder o) {
  return o == TermOrder::degrevlex ? "degrevlex" : "lex";
}

Monomial Monomial::var(std::size_t nvars, std::size_t idx, std::uint32_t e) {
  Monomial m(nvars);
  m.exps.at(idx) = e;
  m.degree = e;
  return m;
}

int mono_compare(const Monomial& a, const Monomial& b, TermOrder order) {
  const std::size_t n = a.exps.size();
  if (order == TermOrder::degrevlex) {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    // ties: scanning up from the least variable, the first difference is
    // decisive and the *smaller* exponent there marks the larger monomial
    for (std::size_t i = 0; i < n; ++i) {
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? 1 : -1;
    }
    return 0;
  }
  // lex: scan down from the greatest variable, larger exponent wins
  for (std::size_t i = n; i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
  }
  return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
  m.degree = a.degree + b.degree;
  return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.degree > b.degree) return false;
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  Monomial m = b;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] -= a.exps[i];
  m.degree = b.degree - a.degree;
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.degree = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    m.exps[i] = std::max(a.exps[i], b.exps[i]);
    m.degree += m.exps[i];
  }
  return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps.size(); ++i)
    if (a.exps[i] > 0 && b.exps[i] > 0) return false;
  return true;
}

CtxPtr make_context(Field f, std::vector<std::string> vars, TermOrder order) {
  return std::make_shared<const PolyContext>(std::move(f), std::move(vars), order);
}

Polynomial Polynomial::constant(CtxPtr ctx, const Scalar& c) {
  Polynomial p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace_back(Monomial::unit(p.ctx_->nvars()), c);
  return p;
}

Polynomial Polynomial::variable(CtxPtr ctx, std::size_t idx) {
  if (idx >= ctx->nvars()) throw input_error("variable index out of range");
  Scalar one = Scalar::one(ctx->field);
  Polynomial p(std::move(ctx));
  p.terms_.emplace_back(Monomial::var(p.ctx_->nvars(), idx), one);
  return p;
}

Polynomial Polynomial::term(CtxPtr ctx, Monomial m, const Scalar& c) {
  Polynomial p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Polynomial Polynomial::from_terms(CtxPtr ctx, std::vector<Term> terms) {
  TermOrder ord = ctx->order;
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return mono_compare(x.first, y.first, ord) > 0;
  });
  Polynomial p(std::move(ctx));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second = p.terms_.back().second + t.second;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
  }
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw input_error("leading term of the zero polynomial");
  return terms_.front().first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw input_error("leading term of the zero polynomial");
  return terms_.front().second;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree);
  return d;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!ctx_->compatible(*o.ctx_))
    throw input_error("polynomials from incompatible rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_compare(terms_[i].first, o.terms_[j].first, ctx_->order);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) r.terms_.emplace_back(terms_[i].first, s);
      ++i; ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first, -t.second);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.emplace_back(mono_mul(t.first, m), t.second * c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      acc.emplace_back(mono_mul(a.first, b.first), a.second * b.second);
  return from_terms(ctx_, std::move(acc));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coefficient().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ctx_->same_ring(*o.ctx_)) return false;
  return terms_ == o.terms_;
}

Polynomial Polynomial::with_context(const CtxPtr& ctx) const {
  if (!ctx_->same_ring(*ctx))
    throw input_error("cannot transport a polynomial to a different ring");
  std::vector<Term> copy = terms_;
  return from_terms(ctx, std::move(copy));
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  TermOrder ord = a.context()->order;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    int c = mono_compare(ta[i].first, tb[i].first, ord);
    if (c != 0) return c < 0;
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return ta.size() < tb.size();
}

std::string mono_str(const Monomial& m, const PolyContext& ctx) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.vars[i];
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Scalar& c = terms_[i].second;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Monomial& m = terms_[i].first;
    if (m.is_unit()) {
      out += mag;
    } else if (mag == "1") {
      out += mono_str(m, *ctx_);
    } else {
      out += mag + "*" + mono_str(m, *ctx_);
    }
  }
  return out;
}

}  // namespace puniv
