#include "pdtensor/resolution.hpp"

#include <algorithm>

namespace pdtensor {

int BettiTable::get(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::total(int i) const {
  int s = 0;
  for (const auto& [key, v] : entries) {
    if (key.first == i) s += v;
  }
  return s;
}

std::vector<int> BettiTable::totals() const {
  std::vector<int> out;
  for (int i = 0; i <= computed_to; ++i) out.push_back(total(i));
  return out;
}

bool FreeComplex::composes_to_zero() const {
  for (std::size_t i = 0; i + 1 < differentials.size(); ++i) {
    if (!differentials[i].compose(differentials[i + 1]).is_zero()) return false;
  }
  return true;
}

bool FreeComplex::all_entries_in_maximal_ideal() const {
  return std::all_of(differentials.begin(), differentials.end(), [](const Matrix& d) { return d.is_minimal(); });
}

namespace {

void record_betti(BettiTable& b, int i, const std::vector<int>& twists) {
  for (int t : twists) b.entries[{i, t}] += 1;
}

}  // namespace

Resolution minimal_resolution(const PresentedModule& m, int bound) {
  if (bound < 0) throw AlgebraError("resolution bound must be non-negative");
  const PresentedModule& mp = m.minimal();
  const RingPtr& ring = m.ring();
  Resolution res;
  res.module = mp;
  res.complex.ring = ring;
  res.complex.is_minimal = true;
  res.complex.modules.push_back(mp.twists());
  record_betti(res.betti, 0, mp.twists());
  res.betti.computed_to = 0;
  if (mp.num_generators() == 0) {
    res.betti.complete = true;
    return res;
  }
  if (bound == 0) return res;
  Matrix d(ring, mp.twists(), mp.relation_degrees(), mp.relations());
  for (int i = 1; i <= bound; ++i) {
    if (d.cols() == 0) {
      res.betti.complete = true;
      return res;
    }
    res.complex.modules.push_back(d.source_twists());
    res.complex.differentials.push_back(d);
    record_betti(res.betti, i, d.source_twists());
    res.betti.computed_to = i;
    if (i == bound) break;
    ModuleOrder src = d.source_order();
    auto kernel = kernel_vectors(d.target_order(), d.columns(), d.source_twists(), {}, ring->reducer());
    auto gens = minimal_generators(kernel, src, ring->reducer());
    std::vector<int> degrees;
    for (const auto& g : gens) degrees.push_back(*vec::homogeneous_degree(g, src));
    d = Matrix(ring, d.source_twists(), std::move(degrees), std::move(gens));
  }
  return res;
}

PresentedModule syzygy_module(const PresentedModule& m, int i) {
  if (i < 1) throw AlgebraError("syzygy index must be at least 1");
  Resolution res = minimal_resolution(m, i + 1);
  const RingPtr& ring = m.ring();
  if (static_cast<int>(res.complex.modules.size()) <= i) return PresentedModule(ring, {}, {});
  const auto& twists = res.complex.modules[static_cast<std::size_t>(i)];
  std::vector<FreeVector> rels;
  if (static_cast<int>(res.complex.differentials.size()) > i) {
    rels = res.complex.differentials[static_cast<std::size_t>(i)].columns();
  }
  return PresentedModule(ring, twists, std::move(rels));
}

PresentedModule restrict_to_ambient(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  RingPtr s = ring->ambient_quotient();
  std::vector<FreeVector> rels = m.relations();
  for (const auto& g : ring->ideal_basis()) {
    for (std::size_t i = 0; i < m.num_generators(); ++i) {
      FreeVector v;
      for (const auto& t : g.terms()) v.push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(i), t.coeff});
      rels.push_back(std::move(v));
    }
  }
  return PresentedModule(s, m.twists(), std::move(rels));
}

int ambient_pd(const PresentedModule& m) {
  PresentedModule over_s = restrict_to_ambient(m);
  const int n = static_cast<int>(m.ring()->nvars());
  Resolution res = minimal_resolution(over_s, n + 1);
  if (res.module.num_generators() == 0) return -1;
  if (!res.betti.complete) throw AlgebraError("resolution over the ambient ring did not terminate");
  return res.betti.computed_to;
}

std::optional<int> depth(const PresentedModule& m) {
  if (is_zero(m)) return std::nullopt;
  return static_cast<int>(m.ring()->nvars()) - ambient_pd(m);
}

int ring_depth(const RingPtr& ring) {
  if (auto d = ring->cached_depth()) return *d;
  int d = *depth(PresentedModule::free(ring, {0}));
  ring->cache_depth(d);
  return d;
}

std::string PdVerdict::to_string() const {
  switch (kind) {
    case Kind::kFinite:
      return "Finite(" + std::to_string(value) + ")";
    case Kind::kInfinite:
      return "Infinite(certificate beta_" + std::to_string(certificate_index) + " = " +
             std::to_string(certificate_rank) + ")";
    case Kind::kMinusInfinity:
      return "MinusInfinity";
    case Kind::kBoundExceeded:
      return "BoundExceeded(" + std::to_string(bound) + ")";
  }
  return "";
}

PdVerdict decide_pd(const PresentedModule& m) {
  PdVerdict v;
  try {
    if (is_zero(m)) {
      v.kind = PdVerdict::Kind::kMinusInfinity;
      return v;
    }
    const int d = ring_depth(m.ring());
    Resolution res = minimal_resolution(m, d + 1);
    const int top = res.betti.computed_to;
    if (res.betti.complete && top <= d) {
      v.kind = PdVerdict::Kind::kFinite;
      v.value = top;
      return v;
    }
    if (top == d + 1 && res.betti.total(d + 1) != 0) {
      v.kind = PdVerdict::Kind::kInfinite;
      v.certificate_index = d + 1;
      v.certificate_rank = res.betti.total(d + 1);
      return v;
    }
    v.kind = PdVerdict::Kind::kFinite;
    v.value = top;
    return v;
  } catch (const BoundExceeded& e) {
    v.kind = PdVerdict::Kind::kBoundExceeded;
    v.bound = e.bound();
    v.message = e.what();
    return v;
  }
}

}  // namespace pdtensor
