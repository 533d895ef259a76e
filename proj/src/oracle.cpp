#include "pdtensor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace pdtensor::oracle {

namespace {

using Vec = std::vector<FieldScalar>;

// Reduced row echelon form, grown one row at a time.
class Echelon {
 public:
  explicit Echelon(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  void reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const FieldScalar c = v[pivots_[r]];
      if (c.is_zero()) continue;
      const Vec& row = rows_[r];
      for (std::size_t k = 0; k < width_; ++k) {
        if (!row[k].is_zero()) v[k] -= c * row[k];
      }
    }
  }

  /// Adds v to the span; false when v was already in it.
  bool add(Vec v) {
    reduce(v);
    std::size_t p = 0;
    while (p < width_ && v[p].is_zero()) ++p;
    if (p == width_) return false;
    const FieldScalar inv = v[p].inverse();
    for (auto& c : v) {
      if (!c.is_zero()) c *= inv;
    }
    for (auto& row : rows_) {
      const FieldScalar c = row[p];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < width_; ++k) {
        if (!v[k].is_zero()) row[k] -= c * v[k];
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  const std::vector<Vec>& rows() const { return rows_; }

  std::vector<std::size_t> free_columns() const {
    std::vector<bool> piv(width_, false);
    for (auto p : pivots_) piv[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < width_; ++k) {
      if (!piv[k]) out.push_back(k);
    }
    return out;
  }

 private:
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Null space of the linear map whose columns are `cols` (each of height h).
std::vector<Vec> null_space(const std::vector<Vec>& cols, std::size_t h, const Field& field) {
  const std::size_t w = cols.size();
  // Row-reduce the transpose-free way: build rows of the h x w matrix.
  std::vector<Vec> rows(h, Vec(w, FieldScalar::zero(field)));
  for (std::size_t j = 0; j < w; ++j) {
    for (std::size_t i = 0; i < h; ++i) rows[i][j] = cols[j][i];
  }
  Echelon e(w);
  for (auto& r : rows) e.add(std::move(r));
  std::vector<Vec> out;
  const auto& piv = e.pivots();
  for (std::size_t f : e.free_columns()) {
    Vec v(w, FieldScalar::zero(field));
    v[f] = FieldScalar::one(field);
    for (std::size_t r = 0; r < e.rank(); ++r) v[piv[r]] = -e.rows()[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of(const std::vector<Vec>& cols, std::size_t h) {
  if (cols.empty() || h == 0) return 0;
  Echelon e(h);
  for (const auto& c : cols) e.add(c);
  return e.rank();
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(0, d);
  return out;
}

// Degree-d piece of R = S/I: standard monomials and a reduction map.
struct RingPiece {
  std::vector<Monomial> monomials;
  std::map<std::vector<int>, std::size_t> index;
  Echelon ideal;
  std::vector<std::size_t> standard;  // free columns of `ideal`
};

class RingCache {
 public:
  explicit RingCache(const Ring& ring) : ring_(ring), field_(ring.ambient->field()) {}

  const Field& field() const { return field_; }
  std::size_t nvars() const { return ring_.ambient->nvars(); }
  const PolyRingPtr& ambient() const { return ring_.ambient; }

  const RingPiece& piece(int d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    RingPiece p;
    p.monomials = monomials_of_degree(nvars(), d);
    for (std::size_t i = 0; i < p.monomials.size(); ++i) p.index[p.monomials[i].exponents()] = i;
    p.ideal = Echelon(p.monomials.size());
    for (const auto& g : ring_.ideal) {
      if (g.is_zero()) continue;
      const int e = g.terms().front().mono.degree();
      for (const auto& m : monomials_of_degree(nvars(), d - e)) {
        Vec v(p.monomials.size(), FieldScalar::zero(field_));
        for (const auto& t : g.terms()) v[p.index.at((t.mono * m).exponents())] += t.coeff;
        p.ideal.add(std::move(v));
      }
    }
    p.standard = p.ideal.free_columns();
    return pieces_.emplace(d, std::move(p)).first->second;
  }

  std::size_t dim(int d) { return d < 0 ? 0 : piece(d).standard.size(); }

  /// Coordinates of c * m * (std monomial k of degree d) in R_{d + deg m}, added into out at offset.
  void add_product(const Polynomial& p, int d, std::size_t k, Vec& out, std::size_t offset) {
    const RingPiece& src = piece(d);
    const Monomial& base = src.monomials[src.standard[k]];
    if (p.is_zero()) return;
    const int e = p.terms().front().mono.degree();
    const RingPiece& dst = piece(d + e);
    Vec v(dst.monomials.size(), FieldScalar::zero(field_));
    for (const auto& t : p.terms()) v[dst.index.at((t.mono * base).exponents())] += t.coeff;
    dst.ideal.reduce(v);
    for (std::size_t j = 0; j < dst.standard.size(); ++j) {
      const FieldScalar& c = v[dst.standard[j]];
      if (!c.is_zero()) out[offset + j] += c;
    }
  }

  /// Coordinates of a homogeneous polynomial of degree d in R_d.
  Vec coords(const Polynomial& p, int d) {
    const RingPiece& dst = piece(d);
    Vec v(dst.monomials.size(), FieldScalar::zero(field_));
    for (const auto& t : p.terms()) v[dst.index.at(t.mono.exponents())] += t.coeff;
    dst.ideal.reduce(v);
    Vec out(dst.standard.size(), FieldScalar::zero(field_));
    for (std::size_t j = 0; j < dst.standard.size(); ++j) out[j] = v[dst.standard[j]];
    return out;
  }

  Polynomial from_coords(const Vec& c, std::size_t offset, int d) {
    const RingPiece& src = piece(d);
    std::vector<Term> terms;
    for (std::size_t j = 0; j < src.standard.size(); ++j) {
      if (!c[offset + j].is_zero()) terms.push_back(Term{src.monomials[src.standard[j]], c[offset + j]});
    }
    return Polynomial(ring_.ambient, std::move(terms));
  }

 private:
  Ring ring_;
  Field field_;
  std::map<int, RingPiece> pieces_;
};

int poly_degree(const Polynomial& p) { return p.terms().front().mono.degree(); }

std::optional<int> column_degree(const std::vector<Polynomial>& col, const std::vector<int>& twists) {
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (!col[i].is_zero()) return poly_degree(col[i]) + twists[i];
  }
  return std::nullopt;
}

// Free module sum_i R(-twists[i]) in degree d: blocks of R_{d - t_i}.
struct FreeLayout {
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;
};

FreeLayout layout(RingCache& rc, const std::vector<int>& twists, int d) {
  FreeLayout l;
  for (int t : twists) {
    l.offsets.push_back(l.dim);
    l.dim += rc.dim(d - t);
  }
  return l;
}

// Column image of a polynomial vector times std monomial: c * (mono k in R_{d-g}).
Vec column_times(RingCache& rc, const std::vector<Polynomial>& col, const std::vector<int>& target_twists,
                 int src_deg_in_ring, std::size_t k, int total_deg) {
  FreeLayout l = layout(rc, target_twists, total_deg);
  Vec v(l.dim, FieldScalar::zero(rc.field()));
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    rc.add_product(col[i], src_deg_in_ring, k, v, l.offsets[i]);
  }
  return v;
}

// Graded pieces of a presented module.
class ModuleCache {
 public:
  ModuleCache(const Module& m, RingCache& rc) : m_(m), rc_(rc) {
    for (const auto& col : m_.relations) rel_deg_.push_back(column_degree(col, m_.twists));
  }

  struct Piece {
    FreeLayout layout;
    Echelon relations;
    std::vector<std::size_t> basis;  // free coordinates of `relations`
  };

  const Piece& piece(int d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    Piece p;
    p.layout = layout(rc_, m_.twists, d);
    p.relations = Echelon(p.layout.dim);
    const std::size_t n = rc_.nvars();
    for (std::size_t r = 0; r < m_.relations.size(); ++r) {
      if (!rel_deg_[r]) continue;
      const auto& col = m_.relations[r];
      for (const auto& mono : monomials_of_degree(n, d - *rel_deg_[r])) {
        Vec v(p.layout.dim, FieldScalar::zero(rc_.field()));
        for (std::size_t i = 0; i < col.size(); ++i) {
          if (col[i].is_zero()) continue;
          Vec c = rc_.coords(col[i].times_term(mono, FieldScalar::one(rc_.field())), d - m_.twists[i]);
          for (std::size_t j = 0; j < c.size(); ++j) v[p.layout.offsets[i] + j] += c[j];
        }
        p.relations.add(std::move(v));
      }
    }
    p.basis = p.relations.free_columns();
    return pieces_.emplace(d, std::move(p)).first->second;
  }

  std::size_t dim(int d) { return piece(d).basis.size(); }

  /// Quotient coordinates of an ambient vector in degree d.
  Vec project(Vec v, int d) {
    const Piece& p = piece(d);
    p.relations.reduce(v);
    Vec out(p.basis.size(), FieldScalar::zero(rc_.field()));
    for (std::size_t j = 0; j < p.basis.size(); ++j) out[j] = v[p.basis[j]];
    return out;
  }

  /// poly * (basis element b of M_d), in quotient coordinates of M_{d + deg poly}.
  Vec multiply(const Polynomial& poly, int d, std::size_t b) {
    const Piece& src = piece(d);
    const std::size_t coord = src.basis[b];
    std::size_t comp = 0;
    while (comp + 1 < src.layout.offsets.size() && src.layout.offsets[comp + 1] <= coord) ++comp;
    const std::size_t k = coord - src.layout.offsets[comp];
    const int e = poly.is_zero() ? 0 : poly_degree(poly);
    const Piece& dst = piece(d + e);
    Vec v(dst.layout.dim, FieldScalar::zero(rc_.field()));
    if (!poly.is_zero()) rc_.add_product(poly, d - m_.twists[comp], k, v, dst.layout.offsets[comp]);
    return project(std::move(v), d + e);
  }

  const Module& module() const { return m_; }
  const std::vector<std::optional<int>>& relation_degrees() const { return rel_deg_; }

 private:
  const Module& m_;
  RingCache& rc_;
  std::vector<std::optional<int>> rel_deg_;
  std::map<int, Piece> pieces_;
};

// One level of a free resolution: F = sum R(-twists), d : F -> previous level.
struct Level {
  std::vector<int> twists;
  std::vector<std::vector<Polynomial>> columns;
};

// Chooses minimal generators, degree by degree in [lo, hi], of the graded
// subspace given by `subspace(d)` of the free module with `twists`.
Level generators_of(RingCache& rc, const std::vector<int>& twists,
                    const std::function<std::vector<Vec>(int)>& subspace, int lo, int hi) {
  Level out;
  const std::size_t n = rc.nvars();
  for (int d = lo; d <= hi; ++d) {
    FreeLayout l = layout(rc, twists, d);
    if (l.dim == 0) continue;
    Echelon span(l.dim);
    for (std::size_t g = 0; g < out.twists.size(); ++g) {
      for (const auto& mono : monomials_of_degree(n, d - out.twists[g])) {
        Vec v(l.dim, FieldScalar::zero(rc.field()));
        const auto& col = out.columns[g];
        for (std::size_t i = 0; i < col.size(); ++i) {
          if (col[i].is_zero()) continue;
          Vec c = rc.coords(col[i].times_term(mono, FieldScalar::one(rc.field())), d - twists[i]);
          for (std::size_t j = 0; j < c.size(); ++j) v[l.offsets[i] + j] += c[j];
        }
        span.add(std::move(v));
      }
    }
    for (auto& v : subspace(d)) {
      if (!span.add(v)) continue;
      std::vector<Polynomial> col;
      for (std::size_t i = 0; i < twists.size(); ++i) col.push_back(rc.from_coords(v, l.offsets[i], d - twists[i]));
      out.twists.push_back(d);
      out.columns.push_back(std::move(col));
    }
  }
  return out;
}

// Matrix of d : F_level -> F_prev in degree d, columns indexed by the basis of F_level in degree d.
std::vector<Vec> level_map(RingCache& rc, const Level& level, const std::vector<int>& prev_twists, int d) {
  std::vector<Vec> cols;
  for (std::size_t g = 0; g < level.twists.size(); ++g) {
    const int e = d - level.twists[g];
    for (std::size_t k = 0; k < rc.dim(e); ++k) cols.push_back(column_times(rc, level.columns[g], prev_twists, e, k, d));
  }
  return cols;
}

// Free resolution of M correct in internal degrees <= hi, levels 0..top.
std::vector<Level> degreewise_resolution(RingCache& rc, ModuleCache& mc, int top, int hi) {
  std::vector<Level> levels;
  Level f0;
  f0.twists = mc.module().twists;
  levels.push_back(f0);
  if (f0.twists.empty() || top == 0) return levels;
  int lo = *std::min_element(f0.twists.begin(), f0.twists.end());
  auto rel_space = [&](int d) {
    const auto& p = mc.piece(d);
    return p.relations.rows();
  };
  levels.push_back(generators_of(rc, f0.twists, rel_space, lo, hi));
  for (int i = 2; i <= top; ++i) {
    const Level& prev = levels.back();
    if (prev.twists.empty()) break;
    const std::vector<int> prev_target = levels[levels.size() - 2].twists;
    lo = *std::min_element(prev.twists.begin(), prev.twists.end());
    auto kernel_space = [&](int d) {
      FreeLayout tl = layout(rc, prev_target, d);
      return null_space(level_map(rc, prev, prev_target, d), tl.dim, rc.field());
    };
    levels.push_back(generators_of(rc, prev.twists, kernel_space, lo, hi));
  }
  return levels;
}

}  // namespace

Module free_module(const Ring& ring, std::vector<int> twists) { return Module{ring, std::move(twists), {}}; }

Module cyclic(const Ring& ring, const std::vector<Polynomial>& gens) {
  Module m{ring, {0}, {}};
  for (const auto& g : gens) m.relations.push_back({g});
  return m;
}

Module residue_field(const Ring& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring.ambient->nvars(); ++i) vars.push_back(Polynomial::variable(ring.ambient, i));
  return cyclic(ring, vars);
}

Module direct_sum(const Module& a, const Module& b) {
  Module m{a.ring, a.twists, {}};
  m.twists.insert(m.twists.end(), b.twists.begin(), b.twists.end());
  const Polynomial zero(a.ring.ambient);
  for (const auto& c : a.relations) {
    auto col = c;
    col.resize(m.twists.size(), zero);
    m.relations.push_back(std::move(col));
  }
  for (const auto& c : b.relations) {
    std::vector<Polynomial> col(a.twists.size(), zero);
    col.insert(col.end(), c.begin(), c.end());
    m.relations.push_back(std::move(col));
  }
  return m;
}

Module tensor(const Module& a, const Module& b) {
  const std::size_t ra = a.twists.size(), rb = b.twists.size();
  Module m{a.ring, {}, {}};
  for (std::size_t i = 0; i < ra; ++i) {
    for (std::size_t j = 0; j < rb; ++j) m.twists.push_back(a.twists[i] + b.twists[j]);
  }
  const Polynomial zero(a.ring.ambient);
  for (const auto& c : a.relations) {
    for (std::size_t j = 0; j < rb; ++j) {
      std::vector<Polynomial> col(ra * rb, zero);
      for (std::size_t i = 0; i < ra; ++i) col[i * rb + j] = c[i];
      m.relations.push_back(std::move(col));
    }
  }
  for (std::size_t i = 0; i < ra; ++i) {
    for (const auto& c : b.relations) {
      std::vector<Polynomial> col(ra * rb, zero);
      for (std::size_t j = 0; j < rb; ++j) col[i * rb + j] = c[j];
      m.relations.push_back(std::move(col));
    }
  }
  return m;
}

std::vector<std::int64_t> hilbert_function(const Module& m, int from, int to) {
  RingCache rc(m.ring);
  ModuleCache mc(m, rc);
  std::vector<std::int64_t> out;
  for (int d = from; d <= to; ++d) out.push_back(static_cast<std::int64_t>(mc.dim(d)));
  return out;
}

std::vector<std::vector<std::int64_t>> tor_dims(const Module& m, const Module& n, int imax, int from, int to) {
  RingCache rc(m.ring);
  ModuleCache mm(m, rc), nn(n, rc);
  int min_twist = 0;
  if (!n.twists.empty()) min_twist = *std::min_element(n.twists.begin(), n.twists.end());
  const int hi = to - min_twist;
  auto levels = degreewise_resolution(rc, mm, imax + 1, hi);
  levels.resize(static_cast<std::size_t>(imax + 2));

  // Boundary (F_i (x) N)_d -> (F_{i-1} (x) N)_d as columns.
  auto boundary = [&](std::size_t i, int d, std::size_t& source_dim, std::size_t& target_dim) {
    const Level& lv = levels[i];
    const Level& prev = levels[i - 1];
    std::vector<std::size_t> offsets;
    target_dim = 0;
    for (int t : prev.twists) {
      offsets.push_back(target_dim);
      target_dim += nn.dim(d - t);
    }
    std::vector<Vec> cols;
    source_dim = 0;
    for (std::size_t g = 0; g < lv.twists.size(); ++g) {
      const int e = d - lv.twists[g];
      const std::size_t dn = nn.dim(e);
      source_dim += dn;
      for (std::size_t b = 0; b < dn; ++b) {
        Vec v(target_dim, FieldScalar::zero(rc.field()));
        for (std::size_t l = 0; l < prev.twists.size(); ++l) {
          const Polynomial& p = lv.columns[g][l];
          if (p.is_zero()) continue;
          Vec w = nn.multiply(p, e, b);
          for (std::size_t j = 0; j < w.size(); ++j) v[offsets[l] + j] += w[j];
        }
        cols.push_back(std::move(v));
      }
    }
    return cols;
  };
  auto chain_dim = [&](std::size_t i, int d) {
    std::size_t s = 0;
    for (int t : levels[i].twists) s += nn.dim(d - t);
    return s;
  };

  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(imax + 1));
  for (int i = 0; i <= imax; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (int d = from; d <= to; ++d) {
      const std::size_t dim = chain_dim(ui, d);
      std::size_t rank_out = 0, rank_in = 0, sd = 0, td = 0;
      if (i >= 1) {
        auto cols = boundary(ui, d, sd, td);
        rank_out = rank_of(cols, td);
      }
      if (!levels[ui + 1].twists.empty()) {
        auto cols = boundary(ui + 1, d, sd, td);
        rank_in = rank_of(cols, td);
      }
      out[ui].push_back(static_cast<std::int64_t>(dim - rank_out - rank_in));
    }
  }
  return out;
}

std::vector<std::int64_t> hom_dims(const Module& m, const Module& n, int from, int to) {
  RingCache rc(m.ring);
  ModuleCache mm(m, rc), nn(n, rc);
  std::vector<std::int64_t> out;
  for (int d = from; d <= to; ++d) {
    // Unknowns: phi(e_k) in N_{t_k + d}.
    std::vector<std::size_t> offsets;
    std::size_t unknowns = 0;
    for (int t : m.twists) {
      offsets.push_back(unknowns);
      unknowns += nn.dim(t + d);
    }
    // For each relation, the constraint map unknowns -> N_{e + d}.
    std::vector<Vec> rows_all;
    for (std::size_t r = 0; r < m.relations.size(); ++r) {
      const auto& e = mm.relation_degrees()[r];
      if (!e) continue;
      const std::size_t h = nn.dim(*e + d);
      if (h == 0) continue;
      std::vector<Vec> block(h, Vec(unknowns, FieldScalar::zero(rc.field())));
      for (std::size_t k = 0; k < m.twists.size(); ++k) {
        const Polynomial& c = m.relations[r][k];
        if (c.is_zero()) continue;
        for (std::size_t b = 0; b < nn.dim(m.twists[k] + d); ++b) {
          Vec w = nn.multiply(c, m.twists[k] + d, b);
          for (std::size_t j = 0; j < h; ++j) block[j][offsets[k] + b] = w[j];
        }
      }
      for (auto& row : block) rows_all.push_back(std::move(row));
    }
    std::size_t rank = 0;
    if (unknowns > 0) {
      Echelon e(unknowns);
      for (auto& row : rows_all) e.add(std::move(row));
      rank = e.rank();
    }
    out.push_back(static_cast<std::int64_t>(unknowns - rank));
  }
  return out;
}

std::vector<std::int64_t> multiplication_kernel_dims(const Module& m, const Polynomial& r, int from, int to) {
  RingCache rc(m.ring);
  ModuleCache mm(m, rc);
  const int e = poly_degree(r);
  std::vector<std::int64_t> out;
  for (int d = from; d <= to; ++d) {
    std::vector<Vec> cols;
    for (std::size_t b = 0; b < mm.dim(d); ++b) cols.push_back(mm.multiply(r, d, b));
    out.push_back(static_cast<std::int64_t>(mm.dim(d) - rank_of(cols, mm.dim(d + e))));
  }
  return out;
}

std::int64_t generator_count(const Module& m, int from, int to) {
  RingCache rc(m.ring);
  ModuleCache mm(m, rc);
  std::int64_t total = 0;
  for (int d = from; d <= to; ++d) {
    std::vector<Vec> cols;
    for (std::size_t v = 0; v < rc.nvars(); ++v) {
      Polynomial x = Polynomial::variable(m.ring.ambient, v);
      for (std::size_t b = 0; b < mm.dim(d - 1); ++b) cols.push_back(mm.multiply(x, d - 1, b));
    }
    total += static_cast<std::int64_t>(mm.dim(d) - rank_of(cols, mm.dim(d)));
  }
  return total;
}

}  // namespace pdtensor::oracle
