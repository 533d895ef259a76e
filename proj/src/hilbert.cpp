#include "pdtensor/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "pdtensor/resolution.hpp"

namespace pdtensor {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, std::int64_t coeff) {
  LaurentPolynomial p;
  p.add(exponent, coeff);
  return p;
}

std::int64_t LaurentPolynomial::coefficient(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t LaurentPolynomial::value_at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

void LaurentPolynomial::add(int e, std::int64_t c) {
  if (c == 0) return;
  auto& slot = coeffs_[e];
  slot += c;
  if (slot == 0) coeffs_.erase(e);
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial r(*this);
  for (const auto& [e, c] : o.coeffs_) r.add(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial r(*this);
  for (const auto& [e, c] : o.coeffs_) r.add(e, -c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial r;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) r.add(e1 + e2, c1 * c2);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::divided_by_one_minus_t() const {
  if (value_at_one() != 0) throw AlgebraError("Laurent polynomial is not divisible by 1 - t");
  LaurentPolynomial q;
  if (coeffs_.empty()) return q;
  // q_a = sum_{b <= a} k_b; the top prefix sum vanishes.
  std::int64_t run = 0;
  int lo = coeffs_.begin()->first, hi = coeffs_.rbegin()->first;
  for (int a = lo; a < hi; ++a) {
    run += coefficient(a);
    q.add(a, run);
  }
  return q;
}

std::string LaurentPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    std::int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "t";
    if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t HilbertSeries::hf(int d) const {
  if (dim < 0) return 0;
  if (dim == 0) return reduced.coefficient(d);
  std::int64_t s = 0;
  for (const auto& [a, q] : reduced.coefficients()) {
    if (a > d) break;
    s += q * binomial(d - a + dim - 1, dim - 1);
  }
  return s;
}

std::vector<std::int64_t> HilbertSeries::hf_range(int from, int to) const {
  std::vector<std::int64_t> out;
  for (int d = from; d <= to; ++d) out.push_back(hf(d));
  return out;
}

std::string HilbertSeries::to_string() const {
  if (dim < 0) return "0";
  std::string q = "(" + reduced.to_string() + ")";
  if (dim == 0) return q;
  return q + "/(1-t)^" + std::to_string(dim);
}

HilbertSeries series_from_numerator(LaurentPolynomial numerator, int nvars) {
  HilbertSeries h;
  h.numerator = numerator;
  h.nvars = nvars;
  if (numerator.is_zero()) {
    h.dim = -1;
    return h;
  }
  int pole = nvars;
  LaurentPolynomial q = std::move(numerator);
  while (pole > 0 && q.value_at_one() == 0) {
    q = q.divided_by_one_minus_t();
    --pole;
  }
  h.reduced = std::move(q);
  h.dim = pole;
  h.multiplicity = h.reduced.value_at_one();
  return h;
}

HilbertSeries hilbert_series(const PresentedModule& m) {
  PresentedModule over_s = restrict_to_ambient(m);
  const int n = static_cast<int>(m.ring()->nvars());
  Resolution res = minimal_resolution(over_s, n + 1);
  LaurentPolynomial k;
  for (const auto& [key, beta] : res.betti.entries) {
    k.add(key.second, (key.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(beta));
  }
  return series_from_numerator(std::move(k), n);
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

LaurentPolynomial numerator_rec(std::vector<Monomial> gens) {
  LaurentPolynomial one = LaurentPolynomial::monomial(0);
  if (gens.empty()) return one;
  // Pairwise coprime generators give a product of (1 - t^{deg}).
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  }
  if (coprime) {
    LaurentPolynomial r = one;
    for (const auto& g : gens) r = r * (one - LaurentPolynomial::monomial(g.degree()));
    return r;
  }
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial l = g.lcm(m);
    colon.push_back(m.quotient_of(l));
  }
  LaurentPolynomial a = numerator_rec(gens);
  LaurentPolynomial b = numerator_rec(minimalize(std::move(colon)));
  return a - LaurentPolynomial::monomial(m.degree()) * b;
}

}  // namespace

LaurentPolynomial monomial_ideal_numerator(std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.is_one()) return LaurentPolynomial();
  }
  return numerator_rec(minimalize(std::move(gens)));
}

HilbertSeries hilbert_series_from_leads(const PresentedModule& m) {
  PresentedModule over_s = restrict_to_ambient(m);
  const int n = static_cast<int>(m.ring()->nvars());
  GroebnerBasis gb = buchberger(over_s.relations(), over_s.order());
  std::vector<std::vector<Monomial>> per_comp(m.num_generators());
  for (const auto& g : gb.generators) per_comp[g.front().comp].push_back(g.front().mono);
  LaurentPolynomial k;
  for (std::size_t i = 0; i < per_comp.size(); ++i) {
    k = k + LaurentPolynomial::monomial(m.twists()[i]) * monomial_ideal_numerator(per_comp[i]);
  }
  return series_from_numerator(std::move(k), n);
}

int ring_dim(const RingPtr& ring) {
  if (auto d = ring->cached_dim()) return *d;
  int d = hilbert_series(PresentedModule::free(ring, {0})).dim;
  ring->cache_dim(d);
  return d;
}

CmProfile cm_profile(const PresentedModule& m) {
  if (is_zero(m)) throw AlgebraError("cm_profile of the zero module");
  CmProfile p;
  p.depth = *depth(m);
  p.ring_dim = ring_dim(m.ring());
  HilbertSeries h = hilbert_series(m);
  p.multiplicity = h.multiplicity;
  p.generators = m.minimal().num_generators();
  p.is_mcm = p.depth == p.ring_dim;
  p.is_ulrich = p.is_mcm && p.multiplicity == static_cast<std::int64_t>(p.generators);
  return p;
}

}  // namespace pdtensor
