#include "pdtensor/groebner.hpp"

#include <algorithm>

namespace pdtensor {

EngineLimits& engine_limits() {
  thread_local EngineLimits limits;
  return limits;
}

std::uint32_t divisibility_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] > 0) mask |= 1u << i;
    if (m[i] > 1) mask |= 1u << (i + 8);
    if (m[i] > 3) mask |= 1u << (i + 16);
  }
  return mask;
}

namespace {

bool mask_divides(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

FreeVector place(const std::vector<Term>& poly, std::uint32_t comp) {
  FreeVector g;
  g.reserve(poly.size());
  for (const auto& t : poly) g.push_back(ModuleTerm{t.mono, comp, t.coeff});
  return g;
}

std::optional<int> active_cap(std::optional<int> explicit_cap) {
  if (explicit_cap) return explicit_cap;
  return engine_limits().degree_cap;
}

[[noreturn]] void throw_cap(int degree, int cap) {
  throw BoundExceeded("degree cap " + std::to_string(cap) + " exceeded (pending work in degree " +
                          std::to_string(degree) + ")",
                      cap);
}

}  // namespace

// ---------------------------------------------------------------------------
// IdealReducer

Polynomial IdealReducer::reduce(const Polynomial& p) const {
  if (empty() || p.is_zero()) return p;
  ModuleOrder order(ring->order(), {0});
  FreeVector v = place(p.terms(), 0);
  v = reduce(std::move(v), order);
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (auto& t : v) terms.push_back(Term{t.mono, t.coeff});
  return Polynomial(ring, std::move(terms));
}

FreeVector IdealReducer::reduce(FreeVector v, const ModuleOrder& order) const {
  if (empty()) return v;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const Monomial& m = v[pos].mono;
    std::optional<std::size_t> hit;
    for (std::size_t h = 0; h < leads.size(); ++h) {
      if (leads[h].divides(m)) {
        hit = h;
        break;
      }
    }
    if (!hit) {
      ++pos;
      continue;
    }
    std::uint32_t comp = v[pos].comp;
    FieldScalar c = v[pos].coeff;
    Monomial q = leads[*hit].quotient_of(m);
    vec::sub_mul_from(v, pos, c, q, place(polys[*hit], comp), order);
  }
  return v;
}

std::shared_ptr<const IdealReducer> make_ideal_reducer(const PolyRingPtr& ring,
                                                       const std::vector<Polynomial>& gens) {
  ModuleOrder order(ring->order(), {0});
  std::vector<FreeVector> vecs;
  for (const auto& g : gens) {
    if (!g.homogeneous_degree().is_homogeneous()) {
      throw AlgebraError("inhomogeneous ideal generator: " + g.to_string());
    }
    if (!g.is_zero()) vecs.push_back(place(g.terms(), 0));
  }
  auto reducer = std::make_shared<IdealReducer>();
  reducer->ring = ring;
  if (vecs.empty()) return reducer;
  GroebnerBasis gb = buchberger(vecs, order, nullptr, BuchbergerOptions{false, std::nullopt});
  for (const auto& g : gb.generators) {
    std::vector<Term> terms;
    for (const auto& t : g) terms.push_back(Term{t.mono, t.coeff});
    reducer->leads.push_back(terms.front().mono);
    reducer->polys.push_back(std::move(terms));
  }
  return reducer;
}

// ---------------------------------------------------------------------------
// GroebnerEngine

GroebnerEngine::GroebnerEngine(ModuleOrder order, std::shared_ptr<const IdealReducer> ideal, Options options,
                               ModuleOrder rep_order)
    : order_(std::move(order)), ideal_(std::move(ideal)), options_(options), rep_order_(std::move(rep_order)) {
  if (ideal_ && ideal_->empty()) ideal_.reset();
  if (ideal_) {
    for (const auto& l : ideal_->leads) ideal_masks_.push_back(divisibility_mask(l));
  }
  by_comp_.resize(order_.rank());
}

std::size_t GroebnerEngine::add_input(FreeVector v, std::optional<FreeVector> rep) {
  std::size_t index = input_results_.size();
  input_results_.push_back(std::nullopt);
  if (v.empty()) {
    if (options_.track && rep && !rep->empty()) {
      auto d = vec::homogeneous_degree(*rep, rep_order_);
      record_syzygy(d.value_or(0), std::move(*rep));
    }
    return index;
  }
  for (const auto& t : v) {
    if (t.comp >= order_.rank()) throw AlgebraError("vector component out of range");
  }
  auto d = vec::homogeneous_degree(v, order_);
  if (!d) throw AlgebraError("inhomogeneous input vector");
  if (!options_.track) rep.reset();
  inputs_[*d].push_back(Input{serial_++, index, std::move(v), std::move(rep)});
  return index;
}

std::optional<int> GroebnerEngine::next_degree() const {
  std::optional<int> d;
  if (!pairs_.empty()) d = pairs_.begin()->first;
  if (!inputs_.empty()) {
    int e = inputs_.begin()->first;
    if (!d || e < *d) d = e;
  }
  return d;
}

void GroebnerEngine::run(std::optional<int> up_to) {
  while (true) {
    auto d = next_degree();
    if (!d || (up_to && *d > *up_to)) return;
    auto pit = pairs_.find(*d);
    if (pit != pairs_.end()) {
      std::vector<Pair> batch = std::move(pit->second);
      pairs_.erase(pit);
      if (options_.newest_first) std::reverse(batch.begin(), batch.end());
      for (const auto& p : batch) process_pair(p, *d);
      continue;
    }
    auto iit = inputs_.find(*d);
    if (iit != inputs_.end()) {
      std::vector<Input> batch = std::move(iit->second);
      inputs_.erase(iit);
      for (auto& in : batch) process_input(in, *d);
    }
  }
}

std::optional<std::size_t> GroebnerEngine::find_reducer(const Monomial& m, std::uint32_t comp,
                                                        std::uint32_t mask) const {
  for (std::uint32_t k : by_comp_[comp]) {
    const Lead& l = leads_[k];
    if (mask_divides(l.mask, mask) && l.mono.divides(m)) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> GroebnerEngine::find_ideal_reducer(const Monomial& m, std::uint32_t mask) const {
  if (!ideal_) return std::nullopt;
  for (std::size_t h = 0; h < ideal_->leads.size(); ++h) {
    if (mask_divides(ideal_masks_[h], mask) && ideal_->leads[h].divides(m)) return h;
  }
  return std::nullopt;
}

void GroebnerEngine::subtract_ideal_multiple(FreeVector& v, std::size_t start, const FieldScalar& c,
                                             const Monomial& m, std::size_t h, std::uint32_t comp) const {
  vec::sub_mul_from(v, start, c, m, place(ideal_->polys[h], comp), order_);
}

FreeVector GroebnerEngine::reduce(
    FreeVector v, FreeVector* rep,
    const std::function<void(std::size_t, const FieldScalar&, const Monomial&)>& step) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const Monomial mono = v[pos].mono;
    const std::uint32_t comp = v[pos].comp;
    const std::uint32_t mask = divisibility_mask(mono);
    if (auto h = find_ideal_reducer(mono, mask)) {
      FieldScalar c = v[pos].coeff;
      subtract_ideal_multiple(v, pos, c, ideal_->leads[*h].quotient_of(mono), *h, comp);
      continue;
    }
    if (auto k = find_reducer(mono, comp, mask)) {
      FieldScalar c = v[pos].coeff;
      Monomial q = leads_[*k].mono.quotient_of(mono);
      if (step) step(*k, c, q);
      if (rep && options_.track && !elements_[*k].rep.empty()) {
        *rep = vec::add(*rep, vec::times_term(elements_[*k].rep, c, q), rep_order_);
      }
      vec::sub_mul_from(v, pos, c, q, elements_[*k].v, order_);
      continue;
    }
    ++pos;
  }
  return v;
}

bool GroebnerEngine::chain_skip(const Pair& p, std::uint32_t comp) const {
  const Monomial& L = p.lcm;
  const Monomial& li = leads_[p.i].mono;
  const Monomial& lj = p.j >= 0 ? leads_[static_cast<std::size_t>(p.j)].mono
                                : ideal_->leads[static_cast<std::size_t>(-p.j - 1)];
  const std::uint32_t lmask = divisibility_mask(L);
  for (std::uint32_t k : by_comp_[comp]) {
    if (k == p.i || static_cast<std::int64_t>(k) == p.j) continue;
    const Lead& lk = leads_[k];
    if (!mask_divides(lk.mask, lmask) || !lk.mono.divides(L)) continue;
    if (!(li.lcm(lk.mono) == L) && !(lj.lcm(lk.mono) == L)) return true;
  }
  if (ideal_) {
    for (std::size_t h = 0; h < ideal_->leads.size(); ++h) {
      if (p.j < 0 && static_cast<std::size_t>(-p.j - 1) == h) continue;
      const Monomial& lh = ideal_->leads[h];
      if (!mask_divides(ideal_masks_[h], lmask) || !lh.divides(L)) continue;
      if (!(li.lcm(lh) == L) && !(lj.lcm(lh) == L)) return true;
    }
  }
  return false;
}

void GroebnerEngine::process_pair(const Pair& p, int degree) {
  const std::uint32_t comp = leads_[p.i].comp;
  if (chain_skip(p, comp)) return;
  const Element& gi = elements_[p.i];
  Monomial ti = leads_[p.i].mono.quotient_of(p.lcm);
  FieldScalar one = gi.v.front().coeff;  // monic
  FreeVector v = vec::times_term(gi.v, one, ti);
  FreeVector rep;
  if (options_.track) rep = vec::times_term(gi.rep, one, ti);
  if (p.j >= 0) {
    const Element& gj = elements_[static_cast<std::size_t>(p.j)];
    Monomial tj = leads_[static_cast<std::size_t>(p.j)].mono.quotient_of(p.lcm);
    vec::sub_mul_from(v, 0, one, tj, gj.v, order_);
    if (options_.track) vec::sub_mul(rep, one, tj, gj.rep, rep_order_);
  } else {
    std::size_t h = static_cast<std::size_t>(-p.j - 1);
    subtract_ideal_multiple(v, 0, one, ideal_->leads[h].quotient_of(p.lcm), h, comp);
  }
  FreeVector acc;
  FreeVector r = reduce(std::move(v), options_.track ? &acc : nullptr);
  if (options_.track) rep = vec::sub(rep, acc, rep_order_);
  if (r.empty()) {
    record_syzygy(degree, std::move(rep));
  } else {
    add_element(std::move(r), std::move(rep), degree);
  }
}

void GroebnerEngine::process_input(Input& in, int degree) {
  FreeVector acc;
  FreeVector r = reduce(std::move(in.v), options_.track ? &acc : nullptr);
  FreeVector rep;
  if (options_.track) {
    rep = in.rep ? std::move(*in.rep) : FreeVector{};
    if (!acc.empty()) rep = vec::sub(rep, acc, rep_order_);
  }
  if (r.empty()) {
    record_syzygy(degree, std::move(rep));
    return;
  }
  input_results_[in.index] = elements_.size();
  add_element(std::move(r), std::move(rep), degree);
}

void GroebnerEngine::add_element(FreeVector v, FreeVector rep, int degree) {
  FieldScalar inv = v.front().coeff.inverse();
  if (!inv.is_one()) {
    v = vec::scaled(v, inv);
    rep = vec::scaled(rep, inv);
  }
  const std::uint32_t idx = static_cast<std::uint32_t>(elements_.size());
  const Monomial lead = v.front().mono;
  const std::uint32_t comp = v.front().comp;
  for (std::uint32_t k : by_comp_[comp]) {
    Monomial L = lead.lcm(leads_[k].mono);
    pairs_[order_.degree(L, comp)].push_back(Pair{serial_++, idx, static_cast<std::int64_t>(k), L});
  }
  if (ideal_) {
    for (std::size_t h = 0; h < ideal_->leads.size(); ++h) {
      if (lead.coprime(ideal_->leads[h])) continue;
      Monomial L = lead.lcm(ideal_->leads[h]);
      pairs_[order_.degree(L, comp)].push_back(Pair{serial_++, idx, -static_cast<std::int64_t>(h) - 1, L});
    }
  }
  leads_.push_back(Lead{lead, comp, divisibility_mask(lead)});
  by_comp_[comp].push_back(idx);
  elements_.push_back(Element{std::move(v), std::move(rep), degree});
}

void GroebnerEngine::record_syzygy(int degree, FreeVector rep) {
  if (!options_.track) return;
  if (ideal_) rep = ideal_->reduce(std::move(rep), rep_order_);
  if (!rep.empty()) syzygies_.push_back(Syzygy{degree, std::move(rep)});
}

void GroebnerEngine::interreduce() {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    Element& e = elements_[k];
    FreeVector tail(e.v.begin() + 1, e.v.end());
    FreeVector acc;
    tail = reduce(std::move(tail), options_.track ? &acc : nullptr);
    FreeVector v;
    v.reserve(tail.size() + 1);
    v.push_back(e.v.front());
    v.insert(v.end(), tail.begin(), tail.end());
    e.v = std::move(v);
    if (options_.track && !acc.empty()) e.rep = vec::sub(e.rep, acc, rep_order_);
  }
}

// ---------------------------------------------------------------------------
// Free functions

NormalFormResult normal_form(const FreeVector& v, const GroebnerBasis& basis, const PolyRingPtr& ring) {
  for (const auto& t : v) {
    if (t.comp >= basis.order.rank()) throw AlgebraError("rank mismatch in normal_form");
  }
  std::vector<std::vector<Term>> quotients(basis.generators.size());
  const IdealReducer* ideal = basis.ideal && !basis.ideal->empty() ? basis.ideal.get() : nullptr;
  FreeVector r = v;
  std::size_t pos = 0;
  while (pos < r.size()) {
    const Monomial mono = r[pos].mono;
    const std::uint32_t comp = r[pos].comp;
    const FieldScalar c0 = r[pos].coeff;
    bool hit = false;
    if (ideal) {
      for (std::size_t h = 0; h < ideal->leads.size() && !hit; ++h) {
        if (!ideal->leads[h].divides(mono)) continue;
        vec::sub_mul_from(r, pos, c0, ideal->leads[h].quotient_of(mono), place(ideal->polys[h], comp), basis.order);
        hit = true;
      }
    }
    for (std::size_t g = 0; g < basis.generators.size() && !hit; ++g) {
      const auto& gen = basis.generators[g];
      if (gen.empty()) continue;
      const auto& lt = gen.front();
      if (lt.comp != comp || !lt.mono.divides(mono)) continue;
      FieldScalar c = c0 / lt.coeff;
      Monomial q = lt.mono.quotient_of(mono);
      quotients[g].push_back(Term{q, c});
      vec::sub_mul_from(r, pos, c, q, gen, basis.order);
      hit = true;
    }
    if (!hit) ++pos;
  }
  NormalFormResult out;
  out.remainder = std::move(r);
  for (auto& q : quotients) out.quotients.emplace_back(ring, std::move(q));
  return out;
}

GroebnerBasis buchberger(const std::vector<FreeVector>& gens, const ModuleOrder& order,
                         std::shared_ptr<const IdealReducer> ideal, BuchbergerOptions options) {
  GroebnerEngine engine(order, ideal, GroebnerEngine::Options{false, options.newest_first});
  for (const auto& g : gens) {
    if (!g.empty() && !vec::homogeneous_degree(g, order)) throw AlgebraError("inhomogeneous input to buchberger");
    engine.add_input(g);
  }
  auto cap = active_cap(options.degree_cap);
  engine.run(cap);
  if (engine.pending()) throw_cap(*engine.next_degree(), *cap);
  engine.interreduce();
  GroebnerBasis out;
  out.order = order;
  out.ideal = engine.ideal();
  out.reduced = true;
  for (const auto& e : engine.basis()) out.generators.push_back(e.v);
  std::sort(out.generators.begin(), out.generators.end(), [&](const FreeVector& a, const FreeVector& b) {
    return order.compare(a.front(), b.front()) > 0;
  });
  return out;
}

std::vector<FreeVector> syzygy_basis(const GroebnerBasis& basis, const PolyRingPtr& ring) {
  std::vector<int> degrees;
  for (const auto& g : basis.generators) {
    auto d = vec::homogeneous_degree(g, basis.order);
    degrees.push_back(d.value_or(0));
  }
  auto ideal = basis.ideal ? basis.ideal : make_ideal_reducer(ring, {});
  return kernel_vectors(basis.order, basis.generators, degrees, {}, ideal);
}

std::vector<FreeVector> kernel_vectors(const ModuleOrder& target, const std::vector<FreeVector>& columns,
                                       const std::vector<int>& column_degrees,
                                       const std::vector<FreeVector>& relations,
                                       const std::shared_ptr<const IdealReducer>& ideal) {
  if (columns.size() != column_degrees.size()) throw AlgebraError("column degree count mismatch");
  const PolyRing& ring = *ideal->ring;
  ModuleOrder rep_order(target.monomial_order(), column_degrees);
  GroebnerEngine engine(target, ideal, GroebnerEngine::Options{true, false}, rep_order);
  const FieldScalar one = ring.scalar(1);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const FreeVector& col = columns[k];
    if (!col.empty()) {
      auto d = vec::homogeneous_degree(col, target);
      if (!d) throw AlgebraError("inhomogeneous column");
      if (*d != column_degrees[k]) throw AlgebraError("column degree does not match its twist");
    }
    engine.add_input(col, vec::unit(ring.nvars(), static_cast<std::uint32_t>(k), one));
  }
  for (const auto& rel : relations) engine.add_input(rel, std::nullopt);
  auto cap = engine_limits().degree_cap;
  engine.run(cap);
  if (engine.pending()) throw_cap(*engine.next_degree(), *cap);
  std::vector<FreeVector> out;
  for (const auto& s : engine.syzygies()) out.push_back(s.rep);
  return out;
}

std::vector<FreeVector> minimal_generators(const std::vector<FreeVector>& vectors, const ModuleOrder& order,
                                           const std::shared_ptr<const IdealReducer>& ideal,
                                           const std::vector<FreeVector>& relations) {
  GroebnerEngine engine(order, ideal, {});
  // Relations first: within a degree inputs are processed in queue order.
  for (const auto& rel : relations) engine.add_input(rel);
  const std::size_t offset = relations.size();
  std::vector<FreeVector> reduced;
  reduced.reserve(vectors.size());
  for (const auto& v : vectors) {
    reduced.push_back(ideal ? ideal->reduce(v, order) : v);
    engine.add_input(reduced.back());
  }
  auto cap = engine_limits().degree_cap;
  engine.run(cap);
  if (engine.pending()) throw_cap(*engine.next_degree(), *cap);
  std::vector<FreeVector> out;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (engine.input_results()[offset + k]) out.push_back(std::move(reduced[k]));
  }
  return out;
}

Solver::Solver(ModuleOrder target, std::vector<FreeVector> columns, std::vector<int> column_degrees,
               const std::vector<FreeVector>& relations, std::shared_ptr<const IdealReducer> ideal)
    : ideal_(ideal),
      engine_(std::make_unique<GroebnerEngine>(target, ideal, GroebnerEngine::Options{true, false},
                                               ModuleOrder(target.monomial_order(), column_degrees))) {
  const PolyRing& ring = *ideal->ring;
  const FieldScalar one = ring.scalar(1);
  for (std::size_t k = 0; k < columns.size(); ++k) {
    engine_->add_input(std::move(columns[k]), vec::unit(ring.nvars(), static_cast<std::uint32_t>(k), one));
  }
  for (const auto& rel : relations) engine_->add_input(rel, std::nullopt);
}

Solver::~Solver() = default;

std::optional<FreeVector> Solver::solve(const FreeVector& v) {
  if (v.empty()) return FreeVector{};
  auto d = vec::homogeneous_degree(v, engine_->order());
  if (!d) throw AlgebraError("inhomogeneous right-hand side");
  engine_->run(*d);
  FreeVector acc;
  FreeVector r = engine_->reduce(v, &acc);
  if (!r.empty()) return std::nullopt;
  return ideal_->reduce(std::move(acc), engine_->rep_order());
}

bool Solver::contains(const FreeVector& v) {
  if (v.empty()) return true;
  auto d = vec::homogeneous_degree(v, engine_->order());
  if (!d) throw AlgebraError("inhomogeneous vector");
  engine_->run(*d);
  return engine_->reduce(v).empty();
}

}  // namespace pdtensor
