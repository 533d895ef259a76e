#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdtensor/monomial.hpp"
#include "pdtensor/scalar.hpp"

namespace pdtensor {

/// The ambient polynomial ring k[x_1..x_n]: field, variable names and order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder());

  static std::shared_ptr<const PolyRing> make(Field field, std::vector<std::string> variables,
                                              MonomialOrder order = MonomialOrder()) {
    return std::make_shared<const PolyRing>(field, std::move(variables), order);
  }

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> variable_index(std::string_view name) const;

  FieldScalar scalar(std::int64_t v) const { return FieldScalar::from_int(field_, v); }

  /// Same field, variables and order.
  bool same_as(const PolyRing& o) const {
    return field_ == o.field_ && variables_ == o.variables_ && order_ == o.order_;
  }

 private:
  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  FieldScalar coeff;
};

/// Sentinel result of homogeneous_degree.
struct HomogeneousDegree {
  enum class Kind { kDegree, kAnyDegree, kInhomogeneous };
  Kind kind = Kind::kAnyDegree;
  int degree = 0;

  bool is_homogeneous() const { return kind != Kind::kInhomogeneous; }
  friend bool operator==(const HomogeneousDegree&, const HomogeneousDegree&) = default;
};

/// Sparse polynomial; terms sorted strictly decreasing in the ring order,
/// no zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms; sorts, merges duplicates and drops zeros.
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);

  static Polynomial constant(PolyRingPtr ring, const FieldScalar& c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, const FieldScalar& c);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  HomogeneousDegree homogeneous_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const FieldScalar& c) const;
  Polynomial times_term(const Monomial& m, const FieldScalar& c) const;

  bool operator==(const Polynomial& o) const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o) const;

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Parse error with 1-based column within the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses `coeff*monomial` syntax with + - * ^, integer or a/b coefficients
/// and parentheses, e.g. "x*y - z^2" or "3/2*x^2 - (x+y)*y".
Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text);

}  // namespace pdtensor
