#include "pdtensor/ring.hpp"

namespace pdtensor {

QuotientRing::QuotientRing(PolyRingPtr ambient, const std::vector<Polynomial>& ideal_gens)
    : ambient_(std::move(ambient)) {
  for (const auto& g : ideal_gens) {
    auto hd = g.homogeneous_degree();
    if (!hd.is_homogeneous()) throw AlgebraError("inhomogeneous ideal generator: " + g.to_string());
    if (hd.kind == HomogeneousDegree::Kind::kDegree && hd.degree == 0) {
      throw AlgebraError("ideal generator of degree 0 makes I = (1): " + g.to_string());
    }
  }
  reducer_ = make_ideal_reducer(ambient_, ideal_gens);
  for (const auto& l : reducer_->leads) {
    if (l.is_one()) throw AlgebraError("ideal is the unit ideal");
  }
}

std::vector<Polynomial> QuotientRing::ideal_basis() const {
  std::vector<Polynomial> out;
  for (const auto& p : reducer_->polys) out.emplace_back(ambient_, p);
  return out;
}

Polynomial QuotientRing::parse(std::string_view text) const { return reduce(parse_polynomial(ambient_, text)); }

std::shared_ptr<const QuotientRing> QuotientRing::ambient_quotient() const {
  std::lock_guard lock(mutex_);
  if (is_polynomial_ring()) return shared_from_this();
  if (!ambient_quotient_) ambient_quotient_ = std::make_shared<const QuotientRing>(ambient_, std::vector<Polynomial>{});
  return ambient_quotient_;
}

std::optional<int> QuotientRing::cached_depth() const {
  std::lock_guard lock(mutex_);
  return depth_;
}

void QuotientRing::cache_depth(int d) const {
  std::lock_guard lock(mutex_);
  if (!depth_) depth_ = d;
}

std::optional<int> QuotientRing::cached_dim() const {
  std::lock_guard lock(mutex_);
  return dim_;
}

void QuotientRing::cache_dim(int d) const {
  std::lock_guard lock(mutex_);
  if (!dim_) dim_ = d;
}

std::string QuotientRing::description() const {
  std::string out = field().to_string() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) out += ",";
    out += variables()[i];
  }
  out += "]";
  if (!is_polynomial_ring()) {
    out += "/(";
    auto basis = ideal_basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i) out += ", ";
      out += basis[i].to_string();
    }
    out += ")";
  }
  return out;
}

RingPtr quotient_ring(const Field& field, const std::vector<std::string>& vars,
                      const std::vector<std::string>& ideal_gens) {
  auto S = PolyRing::make(field, vars);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal_gens) gens.push_back(parse_polynomial(S, g));
  return quotient_ring(S, gens);
}

RingPtr quotient_ring(const PolyRingPtr& ambient, const std::vector<Polynomial>& ideal_gens) {
  return std::make_shared<const QuotientRing>(ambient, ideal_gens);
}

}  // namespace pdtensor
