#include "pdtensor/module.hpp"

#include <algorithm>
#include <sstream>

namespace pdtensor {

namespace {

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a->ambient()->same_as(*b->ambient())) throw AlgebraError("ring mismatch");
  auto ia = a->ideal_basis();
  auto ib = b->ideal_basis();
  if (ia.size() != ib.size()) throw AlgebraError("ring mismatch");
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (!(ia[i] == ib[i])) throw AlgebraError("ring mismatch");
  }
}

FreeVector shift_components(const FreeVector& v, std::uint32_t offset) {
  FreeVector out(v);
  for (auto& t : out) t.comp += offset;
  return out;
}

ModuleOrder make_order(const RingPtr& ring, std::vector<int> twists) {
  return ModuleOrder(ring->monomial_order(), std::move(twists));
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (auto& x : out) x = -x;
  return out;
}

std::vector<int> degrees_of(const std::vector<FreeVector>& vs, const ModuleOrder& order) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (const auto& v : vs) {
    auto d = vec::homogeneous_degree(v, order);
    if (!d) throw AlgebraError("inhomogeneous vector");
    out.push_back(*d);
  }
  return out;
}

}  // namespace

FreeVector scale_by(const FreeVector& v, const Polynomial& p, const ModuleOrder& order, const IdealReducer& ideal) {
  FreeVector out;
  out.reserve(v.size() * p.size());
  for (const auto& t : p.terms()) {
    for (const auto& x : v) out.push_back(ModuleTerm{x.mono * t.mono, x.comp, x.coeff * t.coeff});
  }
  vec::canonicalize(out, order);
  return ideal.reduce(std::move(out), order);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(RingPtr ring, std::vector<int> target, std::vector<int> source, std::vector<FreeVector> columns)
    : ring_(std::move(ring)),
      target_(std::move(target)),
      source_(std::move(source)),
      columns_(std::move(columns)),
      target_order_(make_order(ring_, target_)) {
  if (columns_.size() != source_.size()) throw AlgebraError("matrix column count does not match source rank");
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& t : columns_[j]) {
      if (t.comp >= target_.size()) throw AlgebraError("matrix entry outside target rank");
    }
    columns_[j] = ring_->reducer()->reduce(std::move(columns_[j]), target_order_);
    if (columns_[j].empty()) continue;
    auto d = vec::homogeneous_degree(columns_[j], target_order_);
    if (!d || *d != source_[j]) throw AlgebraError("matrix column " + std::to_string(j) + " is not homogeneous of its degree");
  }
}

Matrix Matrix::from_rows(RingPtr ring, std::vector<int> target, std::vector<int> source,
                         const std::vector<std::vector<Polynomial>>& rows) {
  if (rows.size() != target.size()) throw AlgebraError("row count does not match target rank");
  ModuleOrder order = make_order(ring, target);
  std::vector<FreeVector> cols(source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != source.size()) throw AlgebraError("ragged matrix rows");
      entries.push_back(rows[i][j]);
    }
    cols[j] = vec::from_components(entries, order);
  }
  return Matrix(std::move(ring), std::move(target), std::move(source), std::move(cols));
}

ModuleOrder Matrix::source_order() const { return make_order(ring_, source_); }

Polynomial Matrix::entry(std::size_t i, std::size_t j) const {
  return vec::component(columns_[j], static_cast<std::uint32_t>(i), ring_->ambient());
}

FreeVector Matrix::apply(const FreeVector& s) const {
  FreeVector out;
  for (const auto& t : s) {
    for (const auto& x : columns_[t.comp]) out.push_back(ModuleTerm{x.mono * t.mono, x.comp, x.coeff * t.coeff});
  }
  vec::canonicalize(out, target_order_);
  return ring_->reducer()->reduce(std::move(out), target_order_);
}

Matrix Matrix::compose(const Matrix& other) const {
  if (other.rows() != cols()) throw AlgebraError("matrix dimension mismatch in composition");
  std::vector<FreeVector> cols;
  cols.reserve(other.cols());
  for (const auto& c : other.columns()) cols.push_back(apply(c));
  return Matrix(ring_, target_, other.source_, std::move(cols));
}

Matrix Matrix::transpose() const {
  std::vector<FreeVector> cols(rows());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& t : columns_[j]) cols[t.comp].push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(j), t.coeff});
  }
  std::vector<int> target = negated(source_);
  ModuleOrder order = make_order(ring_, target);
  for (auto& c : cols) vec::canonicalize(c, order);
  return Matrix(ring_, std::move(target), negated(target_), std::move(cols));
}

bool Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const FreeVector& c) { return c.empty(); });
}

bool Matrix::is_minimal() const {
  for (const auto& c : columns_) {
    for (const auto& t : c) {
      if (t.mono.is_one()) return false;
    }
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) os << ", ";
      os << entry(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// PresentedModule

PresentedModule::PresentedModule(RingPtr ring, std::vector<int> twists, std::vector<FreeVector> relations)
    : ring_(std::move(ring)), twists_(std::move(twists)), order_(make_order(ring_, twists_)),
      cache_(std::make_shared<Cache>()) {
  for (auto& r : relations) {
    for (const auto& t : r) {
      if (t.comp >= twists_.size()) throw AlgebraError("relation entry outside generator range");
    }
    FreeVector red = ring_->reducer()->reduce(std::move(r), order_);
    if (red.empty()) continue;
    auto d = vec::homogeneous_degree(red, order_);
    if (!d) throw AlgebraError("inhomogeneous relation");
    relation_degrees_.push_back(*d);
    relations_.push_back(std::move(red));
  }
}

PresentedModule PresentedModule::free(RingPtr ring, std::vector<int> twists) {
  return PresentedModule(std::move(ring), std::move(twists), {});
}

PresentedModule PresentedModule::cyclic(RingPtr ring, const std::vector<Polynomial>& gens, int twist) {
  ModuleOrder order = make_order(ring, {twist});
  std::vector<FreeVector> rels;
  for (const auto& g : gens) {
    if (!g.homogeneous_degree().is_homogeneous()) throw AlgebraError("inhomogeneous relation: " + g.to_string());
    rels.push_back(vec::from_components({g}, order));
  }
  return PresentedModule(std::move(ring), {twist}, std::move(rels));
}

PresentedModule PresentedModule::residue_field(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  return cyclic(std::move(ring), vars);
}

Matrix PresentedModule::presentation() const { return Matrix(ring_, twists_, relation_degrees_, relations_); }

bool PresentedModule::is_zero_element(const FreeVector& v) const {
  if (v.empty()) return true;
  std::lock_guard lock(cache_->mutex);
  if (!cache_->solver) {
    cache_->solver = std::make_unique<Solver>(order_, std::vector<FreeVector>{}, std::vector<int>{}, relations_,
                                              ring_->reducer());
  }
  return cache_->solver->contains(ring_->reducer()->reduce(v, order_));
}

namespace {

PresentedModule compute_minimal(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  const IdealReducer& ideal = *ring->reducer();
  std::vector<FreeVector> rels = m.relations();
  std::vector<bool> alive(m.num_generators(), true);
  const ModuleOrder& order = m.order();
  while (true) {
    std::optional<std::size_t> pivot_col;
    ModuleTerm pivot;
    for (std::size_t j = 0; j < rels.size() && !pivot_col; ++j) {
      for (const auto& t : rels[j]) {
        if (t.mono.is_one()) {
          pivot_col = j;
          pivot = t;
          break;
        }
      }
    }
    if (!pivot_col) break;
    const FreeVector pcol = rels[*pivot_col];
    const FieldScalar inv = pivot.coeff.inverse();
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (j == *pivot_col) continue;
      Polynomial f = vec::component(rels[j], pivot.comp, ring->ambient());
      if (f.is_zero()) continue;
      rels[j] = vec::sub(rels[j], scale_by(pcol, f.scaled(inv), order, ideal), order);
    }
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(*pivot_col));
    alive[pivot.comp] = false;
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const FreeVector& v) { return v.empty(); }), rels.end());
  }
  std::vector<std::uint32_t> map(m.num_generators(), 0);
  std::vector<int> twists;
  for (std::size_t i = 0; i < alive.size(); ++i) {
    if (!alive[i]) continue;
    map[i] = static_cast<std::uint32_t>(twists.size());
    twists.push_back(m.twists()[i]);
  }
  ModuleOrder new_order = make_order(ring, twists);
  for (auto& r : rels) r = vec::remap(r, map, new_order);
  rels = minimal_generators(rels, new_order, ring->reducer());
  return PresentedModule(ring, std::move(twists), std::move(rels));
}

}  // namespace

const PresentedModule& PresentedModule::minimal() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->minimal) cache_->minimal = std::make_shared<const PresentedModule>(compute_minimal(*this));
  return *cache_->minimal;
}

std::string PresentedModule::to_string() const {
  std::ostringstream os;
  os << "coker on " << twists_.size() << " generator(s) [";
  for (std::size_t i = 0; i < twists_.size(); ++i) os << (i ? " " : "") << twists_[i];
  os << "] with " << relations_.size() << " relation(s)";
  for (const auto& r : relations_) {
    os << "\n  (";
    auto comps = vec::to_components(r, twists_.size(), ring_->ambient());
    for (std::size_t i = 0; i < comps.size(); ++i) os << (i ? ", " : "") << comps[i].to_string();
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ModuleMap

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, std::vector<FreeVector> images, int degree)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), degree_(degree) {
  check_same_ring(source_.ring(), target_.ring());
  if (images_.size() != source_.num_generators()) throw AlgebraError("map needs one image per source generator");
  for (std::size_t k = 0; k < images_.size(); ++k) {
    images_[k] = target_.ring()->reducer()->reduce(std::move(images_[k]), target_.order());
    if (images_[k].empty()) continue;
    auto d = vec::homogeneous_degree(images_[k], target_.order());
    if (!d || *d != source_.twists()[k] + degree_) throw AlgebraError("map image " + std::to_string(k) + " has the wrong degree");
  }
  for (const auto& r : source_.relations()) {
    if (!target_.is_zero_element(apply(r))) throw AlgebraError("map is not well defined on the source relations");
  }
}

ModuleMap ModuleMap::identity(const PresentedModule& m) {
  std::vector<FreeVector> images;
  for (std::size_t k = 0; k < m.num_generators(); ++k) {
    images.push_back(vec::unit(m.ring()->nvars(), static_cast<std::uint32_t>(k), m.ring()->scalar(1)));
  }
  return ModuleMap(m, m, std::move(images), 0);
}

ModuleMap ModuleMap::zero(const PresentedModule& source, const PresentedModule& target, int degree) {
  return ModuleMap(source, target, std::vector<FreeVector>(source.num_generators()), degree);
}

FreeVector ModuleMap::apply(const FreeVector& s) const {
  FreeVector out;
  for (const auto& t : s) {
    for (const auto& x : images_[t.comp]) out.push_back(ModuleTerm{x.mono * t.mono, x.comp, x.coeff * t.coeff});
  }
  vec::canonicalize(out, target_.order());
  return target_.ring()->reducer()->reduce(std::move(out), target_.order());
}

// ---------------------------------------------------------------------------
// Constructions

PresentedModule subquotient(const RingPtr& ring, const ModuleOrder& ambient, const std::vector<FreeVector>& gens,
                            const std::vector<int>& gen_degrees, const std::vector<FreeVector>& relations) {
  auto rels = kernel_vectors(ambient, gens, gen_degrees, relations, ring->reducer());
  return PresentedModule(ring, gen_degrees, std::move(rels));
}

PresentedModule present_module(RingPtr ring, std::vector<int> twists, std::vector<FreeVector> relations) {
  return PresentedModule(std::move(ring), std::move(twists), std::move(relations));
}

PresentedModule minimal_presentation(const PresentedModule& m) { return m.minimal(); }

PresentedModule shift(const PresentedModule& m, int d) {
  std::vector<int> twists = m.twists();
  for (auto& t : twists) t -= d;
  return PresentedModule(m.ring(), std::move(twists), m.relations());
}

PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n) {
  check_same_ring(m.ring(), n.ring());
  std::vector<int> twists = m.twists();
  twists.insert(twists.end(), n.twists().begin(), n.twists().end());
  std::vector<FreeVector> rels = m.relations();
  const auto offset = static_cast<std::uint32_t>(m.num_generators());
  for (const auto& r : n.relations()) rels.push_back(shift_components(r, offset));
  return PresentedModule(m.ring(), std::move(twists), std::move(rels));
}

PresentedModule tensor_product(const PresentedModule& m, const PresentedModule& n) {
  check_same_ring(m.ring(), n.ring());
  const std::size_t rm = m.num_generators(), rn = n.num_generators();
  std::vector<int> twists;
  twists.reserve(rm * rn);
  for (std::size_t i = 0; i < rm; ++i) {
    for (std::size_t j = 0; j < rn; ++j) twists.push_back(m.twists()[i] + n.twists()[j]);
  }
  ModuleOrder order = make_order(m.ring(), twists);
  std::vector<FreeVector> rels;
  for (const auto& a : m.relations()) {
    for (std::size_t j = 0; j < rn; ++j) {
      std::vector<std::uint32_t> map(rm);
      for (std::size_t i = 0; i < rm; ++i) map[i] = static_cast<std::uint32_t>(i * rn + j);
      rels.push_back(vec::remap(a, map, order));
    }
  }
  for (std::size_t i = 0; i < rm; ++i) {
    std::vector<std::uint32_t> map(rn);
    for (std::size_t j = 0; j < rn; ++j) map[j] = static_cast<std::uint32_t>(i * rn + j);
    for (const auto& b : n.relations()) rels.push_back(vec::remap(b, map, order));
  }
  return PresentedModule(m.ring(), std::move(twists), std::move(rels));
}

ModuleMap HomResult::map(std::size_t i) const {
  const std::size_t rn = target.num_generators();
  std::vector<std::vector<ModuleTerm>> blocks(source.num_generators());
  for (const auto& t : generators[i]) {
    blocks[t.comp / rn].push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(t.comp % rn), t.coeff});
  }
  for (auto& b : blocks) vec::canonicalize(b, target.order());
  return ModuleMap(source, target, std::move(blocks), degrees[i]);
}

HomResult hom_module(const PresentedModule& m, const PresentedModule& n) {
  check_same_ring(m.ring(), n.ring());
  const RingPtr& ring = m.ring();
  const std::size_t rm = m.num_generators(), rn = n.num_generators();
  const std::size_t rl = m.relations().size();
  std::vector<int> p_twists, q_twists;
  for (std::size_t k = 0; k < rm; ++k) {
    for (std::size_t j = 0; j < rn; ++j) p_twists.push_back(n.twists()[j] - m.twists()[k]);
  }
  for (std::size_t l = 0; l < rl; ++l) {
    for (std::size_t j = 0; j < rn; ++j) q_twists.push_back(n.twists()[j] - m.relation_degrees()[l]);
  }
  ModuleOrder p_order = make_order(ring, p_twists);
  ModuleOrder q_order = make_order(ring, q_twists);

  // Column (k,j): sum_l a_{kl} e_{(l,j)}.
  std::vector<FreeVector> columns(rm * rn);
  for (std::size_t l = 0; l < rl; ++l) {
    for (const auto& t : m.relations()[l]) {
      for (std::size_t j = 0; j < rn; ++j) {
        columns[t.comp * rn + j].push_back(
            ModuleTerm{t.mono, static_cast<std::uint32_t>(l * rn + j), t.coeff});
      }
    }
  }
  for (auto& c : columns) vec::canonicalize(c, q_order);

  std::vector<FreeVector> q_relations, p_relations;
  for (std::size_t l = 0; l < rl; ++l) {
    for (const auto& b : n.relations()) q_relations.push_back(shift_components(b, static_cast<std::uint32_t>(l * rn)));
  }
  for (std::size_t k = 0; k < rm; ++k) {
    for (const auto& b : n.relations()) p_relations.push_back(shift_components(b, static_cast<std::uint32_t>(k * rn)));
  }
  auto kernel = kernel_vectors(q_order, columns, p_twists, q_relations, ring->reducer());
  auto gens = minimal_generators(kernel, p_order, ring->reducer(), p_relations);

  HomResult out;
  out.degrees = degrees_of(gens, p_order);
  out.module = minimal_presentation(subquotient(ring, p_order, gens, out.degrees, p_relations));
  out.generators = std::move(gens);
  out.source = m;
  out.target = n;
  return out;
}

PresentedModule dual(const PresentedModule& m) {
  return hom_module(m, PresentedModule::free(m.ring(), {0})).module;
}

PresentedModule auslander_transpose(const PresentedModule& m) {
  const PresentedModule& mp = m.minimal();
  Matrix at = mp.presentation().transpose();
  return PresentedModule(m.ring(), at.target_twists(), at.columns());
}

std::vector<FreeVector> kernel_generators(const ModuleMap& f) {
  std::vector<int> degrees;
  for (int t : f.source().twists()) degrees.push_back(t + f.degree());
  return kernel_vectors(f.target().order(), f.images(), degrees, f.target().relations(), f.source().ring()->reducer());
}

KernelImage map_kernel_image(const ModuleMap& f) {
  const RingPtr& ring = f.source().ring();
  KernelImage out;
  auto kernel = kernel_generators(f);
  out.kernel_generators = minimal_generators(kernel, f.source().order(), ring->reducer(), f.source().relations());
  out.kernel = minimal_presentation(subquotient(ring, f.source().order(), out.kernel_generators,
                                                degrees_of(out.kernel_generators, f.source().order()),
                                                f.source().relations()));
  std::vector<int> image_degrees;
  for (int t : f.source().twists()) image_degrees.push_back(t + f.degree());
  std::vector<FreeVector> img;
  std::vector<int> img_deg;
  for (std::size_t k = 0; k < f.images().size(); ++k) {
    if (f.images()[k].empty()) continue;
    img.push_back(f.images()[k]);
    img_deg.push_back(image_degrees[k]);
  }
  out.image = minimal_presentation(subquotient(ring, f.target().order(), img, img_deg, f.target().relations()));
  std::vector<FreeVector> coker_rels = f.target().relations();
  coker_rels.insert(coker_rels.end(), img.begin(), img.end());
  out.cokernel = minimal_presentation(PresentedModule(ring, f.target().twists(), std::move(coker_rels)));
  return out;
}

bool is_zero(const PresentedModule& m) { return m.minimal().num_generators() == 0; }

FreeInfo is_free(const PresentedModule& m) {
  const PresentedModule& mp = m.minimal();
  FreeInfo info;
  info.free = mp.relations().empty();
  if (info.free) {
    info.rank = mp.num_generators();
    info.twists = mp.twists();
  }
  return info;
}

bool nzd_test(const Polynomial& r, const PresentedModule& m) {
  auto hd = r.homogeneous_degree();
  if (hd.kind != HomogeneousDegree::Kind::kDegree || hd.degree <= 0) {
    throw AlgebraError("nzd_test needs a homogeneous element of positive degree");
  }
  const IdealReducer& ideal = *m.ring()->reducer();
  std::vector<FreeVector> cols;
  std::vector<int> degrees;
  for (std::size_t k = 0; k < m.num_generators(); ++k) {
    FreeVector e = vec::unit(m.ring()->nvars(), static_cast<std::uint32_t>(k), m.ring()->scalar(1));
    cols.push_back(scale_by(e, r, m.order(), ideal));
    degrees.push_back(m.twists()[k] + hd.degree);
  }
  auto kernel = kernel_vectors(m.order(), cols, degrees, m.relations(), m.ring()->reducer());
  for (const auto& v : kernel) {
    if (!m.is_zero_element(v)) return false;
  }
  return true;
}

std::vector<Polynomial> annihilator(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  const std::size_t r = m.num_generators();
  std::vector<int> twists;
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < r; ++i) twists.push_back(m.twists()[i] - m.twists()[k]);
  }
  ModuleOrder order = make_order(ring, twists);
  FreeVector column;
  for (std::size_t k = 0; k < r; ++k) {
    column.push_back(ModuleTerm{Monomial(ring->nvars()), static_cast<std::uint32_t>(k * r + k), ring->scalar(1)});
  }
  vec::canonicalize(column, order);
  std::vector<FreeVector> rels;
  for (std::size_t k = 0; k < r; ++k) {
    for (const auto& rel : m.relations()) rels.push_back(shift_components(rel, static_cast<std::uint32_t>(k * r)));
  }
  auto kernel = kernel_vectors(order, {column}, {0}, rels, ring->reducer());
  ModuleOrder one = make_order(ring, {0});
  auto gens = minimal_generators(kernel, one, ring->reducer());
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(vec::component(g, 0, ring->ambient()));
  return out;
}

BidualityResult biduality_reflexive(const PresentedModule& m) {
  const PresentedModule& mp = m.minimal();
  const RingPtr& ring = m.ring();
  const auto& ideal = ring->reducer();
  const std::size_t r0 = mp.num_generators();
  BidualityResult out;
  if (r0 == 0) {
    out.bidual = mp;
    out.injective = out.surjective = true;
    return out;
  }
  Matrix at = mp.presentation().transpose();  // F0* -> F1*
  ModuleOrder f0_dual = make_order(ring, negated(mp.twists()));
  auto phi = minimal_generators(kernel_vectors(at.target_order(), at.columns(), at.source_twists(), {}, ideal),
                                f0_dual, ideal);
  std::vector<int> phi_deg = degrees_of(phi, f0_dual);
  const std::size_t p = phi.size();

  // Evaluation: e_k -> sum_i (phi_i)_k e_i in (R^p)*.
  ModuleOrder rp_dual = make_order(ring, negated(phi_deg));
  std::vector<FreeVector> theta(r0);
  for (std::size_t i = 0; i < p; ++i) {
    for (const auto& t : phi[i]) theta[t.comp].push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(i), t.coeff});
  }
  for (auto& c : theta) vec::canonicalize(c, rp_dual);
  out.evaluation = theta;

  auto ker_theta = kernel_vectors(rp_dual, theta, mp.twists(), {}, ideal);
  out.injective = std::all_of(ker_theta.begin(), ker_theta.end(),
                              [&](const FreeVector& v) { return mp.is_zero_element(v); });
  if (p == 0) {
    out.bidual = PresentedModule(ring, {}, {});
    out.surjective = true;
    return out;
  }
  ModuleOrder rp = make_order(ring, phi_deg);
  auto z = kernel_vectors(f0_dual, phi, phi_deg, {}, ideal);
  z = minimal_generators(z, rp, ideal);
  std::vector<int> z_deg = degrees_of(z, rp);
  Matrix zt = Matrix(ring, phi_deg, z_deg, z).transpose();  // (R^p)* -> (R^z)*
  auto w = kernel_vectors(zt.target_order(), zt.columns(), zt.source_twists(), {}, ideal);
  w = minimal_generators(w, rp_dual, ideal);
  Solver span(rp_dual, theta, mp.twists(), {}, ideal);
  out.surjective = std::all_of(w.begin(), w.end(), [&](const FreeVector& v) { return span.contains(v); });
  out.bidual = minimal_presentation(subquotient(ring, rp_dual, w, degrees_of(w, rp_dual), {}));
  return out;
}

TraceResult trace_submodule(const PresentedModule& m, const PresentedModule& t) {
  check_same_ring(m.ring(), t.ring());
  const RingPtr& ring = t.ring();
  HomResult hom = hom_module(m, t);
  const std::size_t rt = t.num_generators();
  std::vector<FreeVector> cols;
  std::vector<int> degs;
  for (std::size_t g = 0; g < hom.generators.size(); ++g) {
    std::vector<FreeVector> blocks(m.num_generators());
    for (const auto& x : hom.generators[g]) {
      blocks[x.comp / rt].push_back(ModuleTerm{x.mono, static_cast<std::uint32_t>(x.comp % rt), x.coeff});
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      vec::canonicalize(blocks[k], t.order());
      if (blocks[k].empty()) continue;
      cols.push_back(std::move(blocks[k]));
      degs.push_back(hom.degrees[g] + m.twists()[k]);
    }
  }
  TraceResult out;
  out.hom_generators = hom.generators.size();
  out.embedding = minimal_generators(cols, t.order(), ring->reducer(), t.relations());
  std::vector<int> emb_deg = degrees_of(out.embedding, t.order());
  out.trace = minimal_presentation(subquotient(ring, t.order(), out.embedding, emb_deg, t.relations()));
  Solver span(t.order(), out.embedding, emb_deg, t.relations(), ring->reducer());
  out.equals_target = true;
  for (std::size_t j = 0; j < rt; ++j) {
    if (!span.contains(vec::unit(ring->nvars(), static_cast<std::uint32_t>(j), ring->scalar(1)))) {
      out.equals_target = false;
      break;
    }
  }
  return out;
}

}  // namespace pdtensor
