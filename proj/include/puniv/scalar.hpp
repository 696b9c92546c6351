#ifndef PUNIV_SCALAR_HPP
#define PUNIV_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "puniv/errors.hpp"

namespace puniv {

/// Coefficient field descriptor: the rationals or a prime field F_p with
/// p < 2^31.  Value type, cheap to copy and compare.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);  ///< throws input_error unless p is an odd-or-2 prime < 2^31

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const;  ///< "Q" or "F5"

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An exact field element tagged with its field.  Rational values are GMP
/// rationals; prime-field values are residues in [0, p).
class Scalar {
public:
  Scalar() : field_(Field::rationals()) {}  ///< rational zero

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long v);
  static Scalar from_mpq(mpq_class v);
  static Scalar from_residue(const Field& f, std::uint64_t r);
  /// Parses "a", "-a" or "a/b" (also valid over F_p, where / is field division).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  ///< throws input_error on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order within one field (rationals by value, residues by value);
  /// used only for canonical sorting.
  bool operator<(const Scalar& o) const;

  /// Canonical text: reduced "a/b" over Q (no "/1"), least residue over F_p.
  std::string str() const;

  /// Residue value; precondition: prime field.
  std::uint32_t residue() const;
  /// Rational value; precondition: rational field.
  const mpq_class& rational() const;

private:
  explicit Scalar(const Field& f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;           // meaningful iff field_.is_rational()
  std::uint32_t res_ = 0;   // meaningful otherwise
};

/// Modular inverse of a mod p (p prime); throws input_error for a ≡ 0.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

}  // namespace puniv

#endif
