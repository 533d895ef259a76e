#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pdtensor/scalar.hpp"

namespace pdtensor {

inline constexpr std::size_t kMaxVariables = 8;

/// Dense exponent vector with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) throw AlgebraError("too many variables (max 8)");
  }
  Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}
  explicit Monomial(const std::vector<int>& exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw AlgebraError("negative exponent");
      exps_[i] = static_cast<Exponent>(exps[i]);
      degree_ += exps[i];
    }
  }

  static Monomial variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.exps_[index] = 1;
    m.degree_ = 1;
    return m;
  }

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, int e) {
    degree_ += e - exps_[i];
    exps_[i] = static_cast<Exponent>(e);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] += o.exps_[i];
    r.degree_ += o.degree_;
    return r;
  }

  /// True when this monomial divides `o`.
  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] > o.exps_[i]) return false;
    }
    return true;
  }

  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r(o);
    for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] -= exps_[i];
    r.degree_ -= degree_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      r.exps_[i] = std::max(exps_[i], o.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] != 0 && o.exps_[i] != 0) return false;
    }
    return true;
  }

  std::vector<int> exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

  bool operator==(const Monomial& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && exps_ == o.exps_;
  }

  /// Renders with the given variable names, e.g. "x^2*y"; "1" for the unit.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  int degree_ = 0;
};

enum class Ordering { kLess = -1, kEqual = 0, kGreater = 1 };

/// Monomial order on a fixed number of variables.
class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kLex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }

  /// Returns negative, zero, or positive like strcmp. Throws on variable-count mismatch.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw AlgebraError("monomial variable-count mismatch");
    return compare_unchecked(a, b);
  }

  int compare_unchecked(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.nvars();
    if (kind_ == Kind::kGrevlex) {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::kGrevlex;
};

/// Three-way wrapper matching the LT/EQ/GT vocabulary.
inline Ordering monomial_compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  int c = order.compare(a, b);
  return c < 0 ? Ordering::kLess : (c > 0 ? Ordering::kGreater : Ordering::kEqual);
}

}  // namespace pdtensor
