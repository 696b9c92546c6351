#include "puniv/group_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace puniv {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> m) : orders(std::move(m)) {
  if (orders.empty()) throw input_error("group needs at least one cyclic factor");
  for (std::uint32_t o : orders)
    if (o == 0) throw input_error("cyclic factor of order 0");
}

std::uint64_t FiniteAbelianGroup::size() const {
  std::uint64_t n = 1;
  for (std::uint32_t o : orders) n *= o;
  return n;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::mul(const Elem& a, const Elem& b) const {
  Elem r(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i)
    r[i] = (a[i] + b[i]) % orders[i];
  return r;
}

FiniteAbelianGroup::Elem FiniteAbelianGroup::inverse(const Elem& a) const {
  Elem r(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i)
    r[i] = a[i] == 0 ? 0 : orders[i] - a[i];
  return r;
}

std::vector<FiniteAbelianGroup::Elem> FiniteAbelianGroup::elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(size()));
  Elem cur = identity();
  while (true) {
    out.push_back(cur);
    std::size_t i = orders.size();
    while (i > 0) {
      --i;
      if (++cur[i] < orders[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::size_t FiniteAbelianGroup::index_of(const Elem& e) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + e[i];
  return idx;
}

std::string FiniteAbelianGroup::str() const {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(orders[i]);
  }
  return out;
}

std::string FiniteAbelianGroup::elem_str(const Elem& e) const {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& text) {
  std::vector<std::uint32_t> orders;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'Z')
      throw input_error("cannot parse group '" + text + "' (expected Zm1xZm2...)");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw input_error("cannot parse group '" + text + "'");
    orders.push_back(static_cast<std::uint32_t>(std::stoul(text.substr(start, pos - start))));
    if (pos < text.size()) {
      if (text[pos] != 'x') throw input_error("cannot parse group '" + text + "'");
      ++pos;
      if (pos == text.size()) throw input_error("cannot parse group '" + text + "'");
    }
  }
  return FiniteAbelianGroup(orders);
}

GroupAlgebraElement GroupAlgebraElement::zero(const FiniteAbelianGroup& g, const Field& f) {
  return GroupAlgebraElement(g, f);
}

GroupAlgebraElement GroupAlgebraElement::one(const FiniteAbelianGroup& g, const Field& f) {
  return monomial(g, f, g.identity(), Scalar::one(f));
}

GroupAlgebraElement GroupAlgebraElement::monomial(const FiniteAbelianGroup& g, const Field& f,
                                                  const FiniteAbelianGroup::Elem& sigma,
                                                  const Scalar& c) {
  GroupAlgebraElement e(g, f);
  if (sigma.size() != g.orders.size()) throw input_error("group element arity mismatch");
  e.insert(sigma, c);
  return e;
}

Scalar GroupAlgebraElement::coefficient(const FiniteAbelianGroup::Elem& sigma) const {
  for (const Term& t : terms_)
    if (t.first == sigma) return t.second;
  return Scalar::zero(field_);
}

void GroupAlgebraElement::check_same(const GroupAlgebraElement& o) const {
  if (!(group_ == o.group_) || field_ != o.field_)
    throw input_error("group algebra elements from different algebras");
}

void GroupAlgebraElement::insert(const FiniteAbelianGroup::Elem& sigma, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), sigma,
                             [](const Term& t, const FiniteAbelianGroup::Elem& s) { return t.first < s; });
  if (it != terms_.end() && it->first == sigma) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term(sigma, c));
  }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  check_same(o);
  GroupAlgebraElement r = *this;
  for (const Term& t : o.terms_) r.insert(t.first, t.second);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  return *this + (-o);
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement r(group_, field_);
  for (const Term& t : terms_) r.terms_.emplace_back(t.first, -t.second);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Scalar& c) const {
  GroupAlgebraElement r(group_, field_);
  if (c.is_zero()) return r;
  for (const Term& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  check_same(o);
  GroupAlgebraElement r(group_, field_);
  for (const Term& a : terms_)
    for (const Term& b : o.terms_)
      r.insert(group_.mul(a.first, b.first), a.second * b.second);
  return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  return group_ == o.group_ && field_ == o.field_ && terms_ == o.terms_;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += terms_[i].second.str() + "*" + group_.elem_str(terms_[i].first);
  }
  return out;
}

}  // namespace puniv
