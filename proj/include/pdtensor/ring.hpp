#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pdtensor/groebner.hpp"

namespace pdtensor {

/// R = S/I for a homogeneous ideal I not containing 1, with 𝔪 = (x_1..x_n).
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  QuotientRing(PolyRingPtr ambient, const std::vector<Polynomial>& ideal_gens);

  const PolyRingPtr& ambient() const { return ambient_; }
  const Field& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<std::string>& variables() const { return ambient_->variables(); }
  const MonomialOrder& monomial_order() const { return ambient_->order(); }

  const std::shared_ptr<const IdealReducer>& reducer() const { return reducer_; }
  /// Reduced Groebner basis of I.
  std::vector<Polynomial> ideal_basis() const;
  bool is_polynomial_ring() const { return reducer_->empty(); }

  Polynomial reduce(const Polynomial& p) const { return reducer_->reduce(p); }
  Polynomial parse(std::string_view text) const;
  Polynomial variable(std::size_t i) const { return Polynomial::variable(ambient_, i); }
  FieldScalar scalar(std::int64_t v) const { return ambient_->scalar(v); }

  /// The ambient polynomial ring as a trivial quotient (this ring when I = 0).
  std::shared_ptr<const QuotientRing> ambient_quotient() const;

  /// Cached ring invariants; the value is computed by the resolution layer.
  std::optional<int> cached_depth() const;
  void cache_depth(int d) const;
  std::optional<int> cached_dim() const;
  void cache_dim(int d) const;

  std::string description() const;

 private:
  PolyRingPtr ambient_;
  std::shared_ptr<const IdealReducer> reducer_;
  mutable std::mutex mutex_;
  mutable std::optional<int> depth_;
  mutable std::optional<int> dim_;
  mutable std::shared_ptr<const QuotientRing> ambient_quotient_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

/// Throws AlgebraError for inhomogeneous or constant generators and for I = (1).
RingPtr quotient_ring(const Field& field, const std::vector<std::string>& vars,
                      const std::vector<std::string>& ideal_gens);
RingPtr quotient_ring(const PolyRingPtr& ambient, const std::vector<Polynomial>& ideal_gens);

}  // namespace pdtensor
