#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pdtensor {

/// Raised on malformed algebraic input (mismatched rings, bad degrees, ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws AlgebraError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldScalar;
  explicit Field(std::uint32_t c) : characteristic_(c) {}
  std::uint32_t characteristic_;
};

/// An exact element of a Field.
///
/// Rationals keep a reduced int64 numerator/denominator pair and switch to a
/// GMP rational only when a value stops fitting. Prime-field elements store
/// the canonical residue in [0, p). Both forms are canonical, so equality is
/// structural.
class FieldScalar {
 public:
  /// The rational zero.
  FieldScalar() = default;

  static FieldScalar from_int(const Field& field, std::int64_t value);
  static FieldScalar from_rational(const Field& field, const mpq_class& value);
  static FieldScalar zero(const Field& field) { return from_int(field, 0); }
  static FieldScalar one(const Field& field) { return from_int(field, 1); }

  Field field() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  /// True for negative rationals; always false over F_p.
  bool is_negative() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

  /// Multiplicative inverse. Throws AlgebraError on zero.
  FieldScalar inverse() const;

  mpq_class to_mpq() const;
  std::string to_string() const;

  bool operator==(const FieldScalar& o) const;

 private:
  void check_same_field(const FieldScalar& o) const;
  static FieldScalar make_rational(mpq_class value);
  static FieldScalar make_small(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t modulus_ = 0;  // 0 for rationals
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& s);

}  // namespace pdtensor
