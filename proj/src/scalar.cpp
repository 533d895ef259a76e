#include "pdtensor/scalar.hpp"

#include <limits>
#include <ostream>

namespace pdtensor {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpq_class small_to_mpq(std::int64_t num, std::int64_t den) {
  mpz_class n, d;
  mpz_set_si(n.get_mpz_t(), num);
  mpz_set_si(d.get_mpz_t(), den);
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31)) throw AlgebraError("prime field modulus out of range: " + std::to_string(p));
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw AlgebraError("GF modulus is not prime: " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "QQ" : "GF " + std::to_string(characteristic_);
}

FieldScalar FieldScalar::from_int(const Field& field, std::int64_t value) {
  FieldScalar s;
  s.modulus_ = field.characteristic();
  if (s.modulus_ == 0) {
    s.num_ = value;
    s.den_ = 1;
  } else {
    std::int64_t r = value % static_cast<std::int64_t>(s.modulus_);
    if (r < 0) r += s.modulus_;
    s.num_ = r;
    s.den_ = 1;
  }
  return s;
}

FieldScalar FieldScalar::from_rational(const Field& field, const mpq_class& value) {
  if (field.is_rational()) return make_rational(value);
  mpz_class p = field.characteristic();
  mpz_class n = value.get_num() % p;
  mpz_class d = value.get_den() % p;
  if (d == 0) throw AlgebraError("denominator vanishes in " + field.to_string());
  FieldScalar num = from_int(field, n.get_si());
  FieldScalar den = from_int(field, d.get_si());
  return num / den;
}

FieldScalar FieldScalar::make_rational(mpq_class value) {
  value.canonicalize();
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    FieldScalar s;
    s.num_ = value.get_num().get_si();
    s.den_ = value.get_den().get_si();
    return s;
  }
  FieldScalar s;
  s.big_ = std::make_shared<const mpq_class>(std::move(value));
  s.num_ = 0;
  s.den_ = 0;
  return s;
}

FieldScalar FieldScalar::make_small(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    FieldScalar s;
    return s;
  }
  i128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (fits64(num) && fits64(den)) {
    FieldScalar s;
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
    return s;
  }
  // Rare: spill the 128-bit values into GMP via their decimal form.
  auto to_str = [](i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    std::string out;
    do {
      out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
      u /= 10;
    } while (u != 0);
    return neg ? "-" + out : out;
  };
  mpz_class n(to_str(num)), d(to_str(den));
  mpq_class q(n, d);
  return make_rational(std::move(q));
}

Field FieldScalar::field() const {
  return Field(modulus_);
}

bool FieldScalar::is_negative() const {
  if (modulus_ != 0) return false;
  if (big_) return sgn(*big_) < 0;
  return num_ < 0;
}

void FieldScalar::check_same_field(const FieldScalar& o) const {
  if (modulus_ != o.modulus_) throw AlgebraError("scalar field mismatch");
}

mpq_class FieldScalar::to_mpq() const {
  if (big_) return *big_;
  return small_to_mpq(num_, den_);
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same_field(o);
  if (modulus_ != 0) {
    FieldScalar s;
    s.modulus_ = modulus_;
    s.num_ = (num_ + o.num_) % modulus_;
    return s;
  }
  if (big_ || o.big_) return make_rational(to_mpq() + o.to_mpq());
  if (den_ == 1 && o.den_ == 1) return make_small(static_cast<i128>(num_) + o.num_, 1);
  return make_small(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
}

FieldScalar FieldScalar::operator-() const {
  if (modulus_ != 0) {
    FieldScalar s;
    s.modulus_ = modulus_;
    s.num_ = num_ == 0 ? 0 : modulus_ - num_;
    return s;
  }
  if (big_) return make_rational(-*big_);
  return make_small(-static_cast<i128>(num_), den_);
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same_field(o);
  if (modulus_ != 0) {
    FieldScalar s;
    s.modulus_ = modulus_;
    s.num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_) % modulus_);
    return s;
  }
  if (big_ || o.big_) return make_rational(to_mpq() * o.to_mpq());
  return make_small(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  if (modulus_ != 0) {
    FieldScalar s;
    s.modulus_ = modulus_;
    s.num_ = static_cast<std::int64_t>(mod_pow(static_cast<std::uint64_t>(num_), modulus_ - 2, modulus_));
    return s;
  }
  if (big_) return make_rational(1 / *big_);
  return make_small(den_, num_);
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const { return *this * o.inverse(); }

bool FieldScalar::operator==(const FieldScalar& o) const {
  if (modulus_ != o.modulus_) return false;
  if (big_ || o.big_) {
    if (!big_ || !o.big_) return false;  // canonical: small values never stored big
    return *big_ == *o.big_;
  }
  return num_ == o.num_ && den_ == o.den_;
}

std::string FieldScalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& s) { return os << s.to_string(); }

}  // namespace pdtensor
