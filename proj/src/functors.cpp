#include "pdtensor/functors.hpp"

#include <algorithm>
#include <sstream>

namespace pdtensor {

namespace {

ModuleOrder make_order(const RingPtr& ring, std::vector<int> twists) {
  return ModuleOrder(ring->monomial_order(), std::move(twists));
}

std::vector<int> degrees_of(const std::vector<FreeVector>& vs, const ModuleOrder& order) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(*vec::homogeneous_degree(v, order));
  return out;
}

// A term of a complex of presented modules, written over its free cover.
struct ChainTerm {
  std::vector<int> twists;
  std::vector<FreeVector> relations;
};

// Homology at `here` of  prev --in--> here --out--> next, where in/out are
// images of the free basis of the neighbouring covers.
PresentedModule homology_at(const RingPtr& ring, const ChainTerm& here, const ChainTerm* next,
                            const std::vector<FreeVector>* out, const std::vector<FreeVector>* in) {
  const auto& ideal = ring->reducer();
  ModuleOrder order = make_order(ring, here.twists);
  std::vector<FreeVector> cycles;
  if (next != nullptr && out != nullptr) {
    cycles = kernel_vectors(make_order(ring, next->twists), *out, here.twists, next->relations, ideal);
  } else {
    for (std::size_t i = 0; i < here.twists.size(); ++i) {
      cycles.push_back(vec::unit(ring->nvars(), static_cast<std::uint32_t>(i), ring->scalar(1)));
    }
  }
  std::vector<FreeVector> bounds = here.relations;
  if (in != nullptr) bounds.insert(bounds.end(), in->begin(), in->end());
  auto gens = minimal_generators(cycles, order, ideal, bounds);
  return minimal_presentation(subquotient(ring, order, gens, degrees_of(gens, order), bounds));
}

std::vector<FreeVector> blocks_of(const std::vector<FreeVector>& rels, std::size_t blocks, std::size_t width) {
  std::vector<FreeVector> out;
  for (std::size_t k = 0; k < blocks; ++k) {
    for (const auto& r : rels) {
      FreeVector v(r);
      for (auto& t : v) t.comp += static_cast<std::uint32_t>(k * width);
      out.push_back(std::move(v));
    }
  }
  return out;
}

FunctorProfile finish(std::vector<PresentedModule> modules, int top) {
  FunctorProfile p;
  p.top = top;
  for (auto& m : modules) p.series.push_back(hilbert_series(m));
  p.modules = std::move(modules);
  return p;
}

std::int64_t length_of(const HilbertSeries& h) {
  if (h.dim < 0) return 0;
  if (h.dim > 0) throw AlgebraError("module is not of finite length");
  return h.reduced.value_at_one();
}

}  // namespace

bool FunctorProfile::vanishes_between(int from, int to) const {
  for (int i = from; i <= to; ++i) {
    if (!vanishes(i)) return false;
  }
  return true;
}

std::vector<std::int64_t> FunctorProfile::dims(int i, int from, int to) const {
  return series.at(static_cast<std::size_t>(i)).hf_range(from, to);
}

std::string FunctorProfile::summary() const {
  std::ostringstream os;
  for (int i = 0; i <= top; ++i) {
    if (i > 0) os << " ";
    os << i << ":" << (vanishes(i) ? "0" : "nz");
  }
  return os.str();
}

TorProfile tor(const PresentedModule& m, const PresentedModule& n, int top) {
  if (top < 0) throw AlgebraError("Tor window must be non-negative");
  const RingPtr& ring = m.ring();
  const PresentedModule& nm = n.minimal();
  const std::size_t rn = nm.num_generators();
  Resolution res = minimal_resolution(m, top + 1);
  const auto& fs = res.complex.modules;

  auto term = [&](std::size_t i) {
    ChainTerm t;
    if (i >= fs.size()) return t;
    for (int a : fs[i]) {
      for (int u : nm.twists()) t.twists.push_back(a + u);
    }
    t.relations = blocks_of(nm.relations(), fs[i].size(), rn);
    return t;
  };
  // (d_i (x) 1) on the basis (k, j) of P_i (x) F0(N).
  auto tensored = [&](std::size_t i) {
    const Matrix& d = res.complex.differentials[i - 1];
    ChainTerm target = term(i - 1);
    ModuleOrder order = make_order(ring, target.twists);
    std::vector<FreeVector> cols;
    for (const auto& c : d.columns()) {
      for (std::size_t j = 0; j < rn; ++j) {
        FreeVector v;
        for (const auto& t : c) v.push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(t.comp * rn + j), t.coeff});
        vec::canonicalize(v, order);
        cols.push_back(std::move(v));
      }
    }
    return cols;
  };

  std::vector<PresentedModule> out;
  for (int i = 0; i <= top; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    ChainTerm here = term(ui);
    if (here.twists.empty()) {
      out.push_back(PresentedModule(ring, {}, {}));
      continue;
    }
    std::optional<ChainTerm> next;
    std::optional<std::vector<FreeVector>> outgoing, incoming;
    if (i >= 1) {
      next = term(ui - 1);
      outgoing = tensored(ui);
    }
    if (ui + 1 < fs.size()) incoming = tensored(ui + 1);
    out.push_back(homology_at(ring, here, next ? &*next : nullptr, outgoing ? &*outgoing : nullptr,
                              incoming ? &*incoming : nullptr));
  }
  return finish(std::move(out), top);
}

ExtProfile ext(const PresentedModule& m, const PresentedModule& n, int top) {
  if (top < 0) throw AlgebraError("Ext window must be non-negative");
  const RingPtr& ring = m.ring();
  const PresentedModule& nm = n.minimal();
  const std::size_t rn = nm.num_generators();
  Resolution res = minimal_resolution(m, top + 1);
  const auto& fs = res.complex.modules;

  auto term = [&](std::size_t i) {
    ChainTerm t;
    if (i >= fs.size()) return t;
    for (int a : fs[i]) {
      for (int u : nm.twists()) t.twists.push_back(u - a);
    }
    t.relations = blocks_of(nm.relations(), fs[i].size(), rn);
    return t;
  };
  // delta^{i-1} : Hom(P_{i-1}, N) -> Hom(P_i, N), f -> f o d_i.
  auto dualized = [&](std::size_t i) {
    const Matrix& d = res.complex.differentials[i - 1];
    ChainTerm target = term(i);
    ModuleOrder order = make_order(ring, target.twists);
    std::vector<FreeVector> cols(fs[i - 1].size() * rn);
    for (std::size_t k = 0; k < d.cols(); ++k) {
      for (const auto& t : d.columns()[k]) {
        for (std::size_t j = 0; j < rn; ++j) {
          cols[t.comp * rn + j].push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(k * rn + j), t.coeff});
        }
      }
    }
    for (auto& c : cols) vec::canonicalize(c, order);
    return cols;
  };

  std::vector<PresentedModule> out;
  for (int i = 0; i <= top; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    ChainTerm here = term(ui);
    if (here.twists.empty()) {
      out.push_back(PresentedModule(ring, {}, {}));
      continue;
    }
    std::optional<ChainTerm> next;
    std::optional<std::vector<FreeVector>> outgoing, incoming;
    if (ui + 1 < fs.size()) {
      next = term(ui + 1);
      outgoing = dualized(ui + 1);
    }
    if (i >= 1) incoming = dualized(ui);
    out.push_back(homology_at(ring, here, next ? &*next : nullptr, outgoing ? &*outgoing : nullptr,
                              incoming ? &*incoming : nullptr));
  }
  return finish(std::move(out), top);
}

FreeComplex total_tensor_complex(const FreeComplex& p, const FreeComplex& q) {
  if (p.ring != q.ring && !(p.ring->ambient()->same_as(*q.ring->ambient()) &&
                            p.ring->ideal_basis() == q.ring->ideal_basis())) {
    throw AlgebraError("ring mismatch");
  }
  const RingPtr& ring = p.ring;
  const int lp = static_cast<int>(p.length()), lq = static_cast<int>(q.length());
  const int top = lp + lq;

  // offsets[n][i]: position of block (i, n-i) inside X_n.
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top + 1));
  FreeComplex x;
  x.ring = ring;
  x.is_minimal = p.is_minimal && q.is_minimal;
  for (int n = 0; n <= top; ++n) {
    std::vector<int> twists;
    auto& off = offsets[static_cast<std::size_t>(n)];
    off.assign(static_cast<std::size_t>(lp + 1), 0);
    for (int i = 0; i <= lp; ++i) {
      off[static_cast<std::size_t>(i)] = twists.size();
      int j = n - i;
      if (j < 0 || j > lq) continue;
      for (int a : p.modules[static_cast<std::size_t>(i)]) {
        for (int b : q.modules[static_cast<std::size_t>(j)]) twists.push_back(a + b);
      }
    }
    x.modules.push_back(std::move(twists));
  }

  for (int n = 1; n <= top; ++n) {
    const auto& tgt = x.modules[static_cast<std::size_t>(n - 1)];
    ModuleOrder order = make_order(ring, tgt);
    std::vector<FreeVector> cols;
    for (int i = 0; i <= lp; ++i) {
      int j = n - i;
      if (j < 0 || j > lq) continue;
      const auto& pi = p.modules[static_cast<std::size_t>(i)];
      const auto& qj = q.modules[static_cast<std::size_t>(j)];
      for (std::size_t a = 0; a < pi.size(); ++a) {
        for (std::size_t b = 0; b < qj.size(); ++b) {
          FreeVector v;
          if (i >= 1) {
            const std::size_t base = offsets[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)];
            for (const auto& t : p.differentials[static_cast<std::size_t>(i - 1)].columns()[a]) {
              v.push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(base + t.comp * qj.size() + b), t.coeff});
            }
          }
          if (j >= 1) {
            const std::size_t base = offsets[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
            const std::size_t width = q.modules[static_cast<std::size_t>(j - 1)].size();
            for (const auto& t : q.differentials[static_cast<std::size_t>(j - 1)].columns()[b]) {
              FieldScalar c = i % 2 == 0 ? t.coeff : -t.coeff;
              v.push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(base + a * width + t.comp), c});
            }
          }
          vec::canonicalize(v, order);
          cols.push_back(std::move(v));
        }
      }
    }
    x.differentials.emplace_back(ring, tgt, x.modules[static_cast<std::size_t>(n)], std::move(cols));
  }
  return x;
}

PresentedModule complex_homology(const FreeComplex& x, int i) {
  if (i < 0 || i > static_cast<int>(x.length())) throw AlgebraError("homology index out of range");
  const auto ui = static_cast<std::size_t>(i);
  ChainTerm here{x.modules[ui], {}};
  std::optional<ChainTerm> next;
  const std::vector<FreeVector>* outgoing = nullptr;
  const std::vector<FreeVector>* incoming = nullptr;
  if (i >= 1) {
    next = ChainTerm{x.modules[ui - 1], {}};
    outgoing = &x.differentials[ui - 1].columns();
  }
  if (ui < x.differentials.size()) incoming = &x.differentials[ui].columns();
  return homology_at(x.ring, here, next ? &*next : nullptr, outgoing, incoming);
}

PresentedModule canonical_module(const RingPtr& ring) {
  const int depth_r = ring_depth(ring), dim_r = ring_dim(ring);
  if (depth_r != dim_r) throw AlgebraError("canonical module requires a Cohen-Macaulay ring");
  const int n = static_cast<int>(ring->nvars());
  const int c = n - dim_r;
  Resolution res = minimal_resolution(restrict_to_ambient(PresentedModule::free(ring, {0})), n + 1);
  if (c == 0) return PresentedModule::free(ring, {n});
  Matrix dt = res.complex.differentials[static_cast<std::size_t>(c - 1)].transpose();
  std::vector<int> twists = dt.target_twists();
  for (auto& t : twists) t += n;
  return minimal_presentation(PresentedModule(ring, std::move(twists), dt.columns()));
}

std::string IdVerdict::to_string() const {
  switch (kind) {
    case Kind::kFinite:
      return "Finite(" + std::to_string(value) + ")";
    case Kind::kInfinite:
      return "Infinite(certificate mu^" + std::to_string(certificate_index) + " = " +
             std::to_string(certificate_rank) + ")";
    case Kind::kBoundExceeded:
      return "BoundExceeded(" + std::to_string(bound) + ")";
  }
  return "";
}

std::vector<std::int64_t> bass_numbers(const PresentedModule& m, int top) {
  ExtProfile e = ext(PresentedModule::residue_field(m.ring()), m, top);
  std::vector<std::int64_t> out;
  for (const auto& h : e.series) out.push_back(length_of(h));
  return out;
}

IdVerdict decide_id(const PresentedModule& m) {
  if (is_zero(m)) throw AlgebraError("decide_id of the zero module");
  IdVerdict v;
  try {
    const int dr = ring_depth(m.ring());
    const int top = std::max(*depth(m), dr) + 1;
    v.bass = bass_numbers(m, top);
    const std::int64_t mu = v.bass.back();
    if (mu != 0) {
      v.kind = IdVerdict::Kind::kInfinite;
      v.certificate_index = top;
      v.certificate_rank = mu;
    } else {
      v.kind = IdVerdict::Kind::kFinite;
      v.value = dr;
    }
  } catch (const BoundExceeded& e) {
    v.kind = IdVerdict::Kind::kBoundExceeded;
    v.bound = e.bound();
    v.message = e.what();
  }
  return v;
}

std::string ReflexivityCheck::to_string() const {
  if (confirmed) return "ConfirmedUpTo(" + std::to_string(bound) + ")";
  return "RefutedAt(" + std::to_string(refuted_at) + ", " + side + ")";
}

ReflexivityCheck totally_reflexive_check(const PresentedModule& m, int bound) {
  if (bound < 1) throw AlgebraError("reflexivity bound must be at least 1");
  ReflexivityCheck r;
  r.bound = bound;
  r.biduality = biduality_reflexive(m).bijective();
  const PresentedModule ring_module = PresentedModule::free(m.ring(), {0});
  ExtProfile em = ext(m, ring_module, bound);
  ExtProfile et = ext(auslander_transpose(m), ring_module, bound);
  for (int i = bound; i >= 1; --i) {
    if (!em.vanishes(i)) r.ext_index = i;
    if (!et.vanishes(i)) r.transpose_ext_index = i;
  }
  if (!r.biduality) {
    r.refuted_at = 0;
    r.side = "biduality";
  } else if (r.ext_index > 0 && (r.transpose_ext_index < 0 || r.ext_index <= r.transpose_ext_index)) {
    r.refuted_at = r.ext_index;
    r.side = "Ext(M,R)";
  } else if (r.transpose_ext_index > 0) {
    r.refuted_at = r.transpose_ext_index;
    r.side = "Ext(Tr M,R)";
  }
  r.confirmed = r.refuted_at < 0;
  return r;
}

bool BettiGrowth::strictly_increasing(int from, int to) const {
  for (int i = from; i < to; ++i) {
    if (betti.at(static_cast<std::size_t>(i + 1)) <= betti.at(static_cast<std::size_t>(i))) return false;
  }
  return true;
}

BettiGrowth betti_growth_report(const PresentedModule& m, int window) {
  if (window < 2) throw AlgebraError("growth window must be at least 2");
  Resolution res = minimal_resolution(m, window);
  BettiGrowth g;
  for (int i = 0; i <= window; ++i) g.betti.push_back(res.betti.total(i));
  for (int i = 0; i < window; ++i) {
    const auto b = g.betti[static_cast<std::size_t>(i)];
    g.ratios.push_back(b == 0 ? 0.0 : static_cast<double>(g.betti[static_cast<std::size_t>(i + 1)]) / b);
  }
  return g;
}

bool locally_free_on_punctured_spectrum(const PresentedModule& m) {
  if (is_free(m).free) return true;
  PresentedModule omega = syzygy_module(m, 1);
  ExtProfile e = ext(m, omega, 1);
  return e.series[1].dim <= 0;
}

}  // namespace pdtensor
