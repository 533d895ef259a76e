#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdtensor/module.hpp"

namespace pdtensor {

/// Integer Laurent polynomial in t.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(int exponent, std::int64_t coeff = 1);

  const std::map<int, std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(int e) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t value_at_one() const;

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  void add(int e, std::int64_t c);
  /// Exact quotient by (1 - t); requires value_at_one() == 0.
  LaurentPolynomial divided_by_one_minus_t() const;

  std::string to_string() const;
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, std::int64_t> coeffs_;
};

/// H_M(t) = numerator / (1-t)^nvars, also kept in lowest terms Q(t)/(1-t)^dim.
struct HilbertSeries {
  LaurentPolynomial numerator;
  int nvars = 0;
  LaurentPolynomial reduced;
  /// Krull dimension; -1 for the zero module.
  int dim = -1;
  /// Q(1): the degree multiplicity e(𝔪, M).
  std::int64_t multiplicity = 0;

  /// dim_k M_d.
  std::int64_t hf(int d) const;
  std::vector<std::int64_t> hf_range(int from, int to) const;
  std::string to_string() const;
};

/// From the minimal resolution over S of restrict_to_ambient(M).
HilbertSeries hilbert_series(const PresentedModule& m);
/// Independent route: counts standard monomials of the lead-term module.
HilbertSeries hilbert_series_from_leads(const PresentedModule& m);
/// Numerator K with H(S/J) = K / (1-t)^n for a monomial ideal J.
LaurentPolynomial monomial_ideal_numerator(std::vector<Monomial> gens);
HilbertSeries series_from_numerator(LaurentPolynomial numerator, int nvars);

int ring_dim(const RingPtr& ring);

struct CmProfile {
  bool is_mcm = false;
  bool is_ulrich = false;
  int depth = 0;
  int ring_dim = 0;
  std::int64_t multiplicity = 0;
  std::size_t generators = 0;
};
/// Throws AlgebraError for the zero module.
CmProfile cm_profile(const PresentedModule& m);

}  // namespace pdtensor
