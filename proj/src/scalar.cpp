#include "puniv/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace puniv {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_from_long(long v, std::uint32_t p) {
  long m = v % static_cast<long>(p);
  if (m < 0) m += p;
  return static_cast<std::uint32_t>(m);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw input_error("field modulus must be a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

std::string Field::str() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw input_error("division by zero in F" + std::to_string(p));
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t; new_t = tmp;
    tmp = r - q * new_r;
    r = new_r; new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s(f);
  if (f.is_rational()) s.rat_ = v;
  else s.res_ = mod_from_long(v, f.characteristic());
  return s;
}

Scalar Scalar::from_mpq(mpq_class v) {
  Scalar s(Field::rationals());
  v.canonicalize();
  s.rat_ = std::move(v);
  return s;
}

Scalar Scalar::from_residue(const Field& f, std::uint64_t r) {
  if (f.is_rational()) throw input_error("residue constructor needs a prime field");
  Scalar s(f);
  s.res_ = static_cast<std::uint32_t>(r % f.characteristic());
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  // accept: [-]digits or [-]digits/digits (the sign sits on the numerator)
  auto bad = [&]() -> input_error {
    return input_error("cannot parse coefficient '" + text + "'");
  };
  std::size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto check_int = [&](const std::string& s, bool sign_ok) {
    if (s.empty()) throw bad();
    std::size_t i = (sign_ok && s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  check_int(num, true);
  check_int(den, false);
  if (f.is_rational()) {
    mpz_class n(num), d(den);
    if (mpz_sgn(d.get_mpz_t()) == 0) throw input_error("zero denominator in '" + text + "'");
    return from_mpq(mpq_class(n, d));
  }
  std::uint32_t p = f.characteristic();
  mpz_class n(num), d(den);
  std::uint32_t nr = static_cast<std::uint32_t>(mpz_fdiv_ui(n.get_mpz_t(), p));
  std::uint32_t dr = static_cast<std::uint32_t>(mpz_fdiv_ui(d.get_mpz_t(), p));
  if (dr == 0) throw input_error("denominator of '" + text + "' vanishes in F" + std::to_string(p));
  return from_residue(f, static_cast<std::uint64_t>(nr) * mod_inverse(dr, p));
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw input_error("mixed coefficient fields: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rational()) s.rat_ = rat_ + o.rat_;
  else s.res_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(res_) + o.res_) % field_.characteristic());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rational()) s.rat_ = rat_ - o.rat_;
  else {
    std::uint32_t p = field_.characteristic();
    s.res_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(res_) + p - o.res_) % p);
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rational()) s.rat_ = rat_ * o.rat_;
  else s.res_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(res_) * o.res_ % field_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) s.rat_ = -rat_;
  else s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    if (rat_ == 0) throw input_error("division by zero in Q");
    s.rat_ = 1 / rat_;
  } else {
    s.res_ = mod_inverse(res_, field_.characteristic());
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

bool Scalar::operator<(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rat_ < o.rat_ : res_ < o.res_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return rat_.get_str();
  return std::to_string(res_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw input_error("residue() called on a rational scalar");
  return res_;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw input_error("rational() called on a prime-field scalar");
  return rat_;
}

}  // namespace puniv
