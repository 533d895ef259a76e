#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pdtensor/polynomial.hpp"

namespace pdtensor {

/// One term c * m * e_comp of a vector in a graded free module.
struct ModuleTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  FieldScalar coeff;
};

/// Sparse element of a graded free module: terms sorted strictly decreasing
/// in the module order of the ambient module, no zero coefficients.
using FreeVector = std::vector<ModuleTerm>;

/// Monomial order on a graded free module sum_i S(-d_i).
///
/// Terms compare first by weighted degree deg(m) + d_i, then by the monomial
/// order, then by position (e_0 > e_1 > ...). A Schreyer order instead
/// compares m*e_i against n*e_j through the lead terms L_i, L_j of a map to
/// another free module: m*L_i vs n*L_j in that module's order, ties broken
/// by position.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  ModuleOrder(MonomialOrder mono, std::vector<int> degrees)
      : mono_(mono), degrees_(std::make_shared<const std::vector<int>>(std::move(degrees))) {}

  struct SchreyerData {
    std::vector<Monomial> lead_monos;
    std::vector<std::uint32_t> lead_comps;
    std::vector<int> target_degrees;
  };
  static ModuleOrder schreyer(MonomialOrder mono, std::vector<int> degrees, SchreyerData data) {
    ModuleOrder o(mono, std::move(degrees));
    o.schreyer_ = std::make_shared<const SchreyerData>(std::move(data));
    return o;
  }

  const MonomialOrder& monomial_order() const { return mono_; }
  const std::vector<int>& degrees() const { return *degrees_; }
  std::size_t rank() const { return degrees_ ? degrees_->size() : 0; }
  bool is_schreyer() const { return schreyer_ != nullptr; }

  int degree(const Monomial& m, std::uint32_t comp) const { return m.degree() + (*degrees_)[comp]; }
  int degree(const ModuleTerm& t) const { return degree(t.mono, t.comp); }

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    const auto& deg = *degrees_;
    int da = a.degree() + deg[ca];
    int db = b.degree() + deg[cb];
    if (da != db) return da < db ? -1 : 1;
    if (schreyer_) {
      const auto& s = *schreyer_;
      Monomial la = a * s.lead_monos[ca];
      Monomial lb = b * s.lead_monos[cb];
      int c = mono_.compare_unchecked(la, lb);
      if (c != 0) return c;
      if (s.lead_comps[ca] != s.lead_comps[cb]) return s.lead_comps[ca] < s.lead_comps[cb] ? 1 : -1;
      if (ca != cb) return ca < cb ? 1 : -1;
      return 0;
    }
    int c = mono_.compare_unchecked(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }

 private:
  MonomialOrder mono_;
  std::shared_ptr<const std::vector<int>> degrees_;
  std::shared_ptr<const SchreyerData> schreyer_;
};

namespace vec {

/// Sorts, merges equal terms and drops zeros.
void canonicalize(FreeVector& v, const ModuleOrder& order);

FreeVector add(const FreeVector& a, const FreeVector& b, const ModuleOrder& order);
FreeVector sub(const FreeVector& a, const FreeVector& b, const ModuleOrder& order);
FreeVector scaled(const FreeVector& v, const FieldScalar& c);
/// c * m * v; stays sorted because module orders are multiplicative.
FreeVector times_term(const FreeVector& v, const FieldScalar& c, const Monomial& m);

/// v[start..] -= c * m * g, where c*m*lead(g) equals v[start] (so that
/// term cancels) and v[0..start) is left in place.
void sub_mul_from(FreeVector& v, std::size_t start, const FieldScalar& c, const Monomial& m,
                  const FreeVector& g, const ModuleOrder& order);
/// v -= c * m * g without the lead-cancellation precondition.
void sub_mul(FreeVector& v, const FieldScalar& c, const Monomial& m, const FreeVector& g,
             const ModuleOrder& order);

/// Re-sorts a vector for a different order on the same free module.
FreeVector resorted(FreeVector v, const ModuleOrder& order);

/// Weighted degree if all terms agree, nullopt otherwise; zero has no degree.
std::optional<int> homogeneous_degree(const FreeVector& v, const ModuleOrder& order);

/// c * e_comp.
FreeVector unit(std::size_t nvars, std::uint32_t comp, const FieldScalar& c);

/// Polynomial in component `comp`.
Polynomial component(const FreeVector& v, std::uint32_t comp, const PolyRingPtr& ring);
FreeVector from_components(const std::vector<Polynomial>& entries, const ModuleOrder& order);
std::vector<Polynomial> to_components(const FreeVector& v, std::size_t rank, const PolyRingPtr& ring);

/// Re-indexes components through `map` (old index -> new index).
FreeVector remap(const FreeVector& v, const std::vector<std::uint32_t>& map, const ModuleOrder& order);

bool equal(const FreeVector& a, const FreeVector& b);

}  // namespace vec
}  // namespace pdtensor
