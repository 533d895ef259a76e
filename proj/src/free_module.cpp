#include "pdtensor/free_module.hpp"

#include <algorithm>

namespace pdtensor::vec {

void canonicalize(FreeVector& v, const ModuleOrder& order) {
  std::sort(v.begin(), v.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return order.compare(a, b) > 0;
  });
  FreeVector out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

FreeVector add(const FreeVector& a, const FreeVector& b, const ModuleOrder& order) {
  FreeVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      FieldScalar s = a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back(ModuleTerm{a[i].mono, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

FreeVector sub(const FreeVector& a, const FreeVector& b, const ModuleOrder& order) {
  if (b.empty()) return a;
  FreeVector nb(b);
  for (auto& t : nb) t.coeff = -t.coeff;
  return add(a, nb, order);
}

FreeVector scaled(const FreeVector& v, const FieldScalar& c) {
  if (c.is_zero()) return {};
  FreeVector out(v);
  for (auto& t : out) t.coeff *= c;
  return out;
}

FreeVector times_term(const FreeVector& v, const FieldScalar& c, const Monomial& m) {
  if (c.is_zero()) return {};
  FreeVector out(v);
  for (auto& t : out) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return out;
}

void sub_mul_from(FreeVector& v, std::size_t start, const FieldScalar& c, const Monomial& m,
                  const FreeVector& g, const ModuleOrder& order) {
  thread_local FreeVector scratch;
  scratch.clear();
  scratch.reserve(v.size() + g.size());
  // Lead terms cancel by precondition.
  std::size_t i = start + 1, j = 1;
  while (i < v.size() && j < g.size()) {
    Monomial gm = g[j].mono * m;
    int cmp = order.compare(v[i].mono, v[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      scratch.push_back(std::move(v[i++]));
    } else if (cmp < 0) {
      scratch.push_back(ModuleTerm{gm, g[j].comp, -(c * g[j].coeff)});
      ++j;
    } else {
      FieldScalar s = v[i].coeff - c * g[j].coeff;
      if (!s.is_zero()) scratch.push_back(ModuleTerm{gm, g[j].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < v.size(); ++i) scratch.push_back(std::move(v[i]));
  for (; j < g.size(); ++j) scratch.push_back(ModuleTerm{g[j].mono * m, g[j].comp, -(c * g[j].coeff)});
  v.resize(start);
  v.insert(v.end(), std::make_move_iterator(scratch.begin()), std::make_move_iterator(scratch.end()));
}

void sub_mul(FreeVector& v, const FieldScalar& c, const Monomial& m, const FreeVector& g,
             const ModuleOrder& order) {
  if (c.is_zero() || g.empty()) return;
  v = add(v, times_term(g, -c, m), order);
}

FreeVector resorted(FreeVector v, const ModuleOrder& order) {
  std::sort(v.begin(), v.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return order.compare(a, b) > 0;
  });
  return v;
}

std::optional<int> homogeneous_degree(const FreeVector& v, const ModuleOrder& order) {
  if (v.empty()) return std::nullopt;
  int d = order.degree(v.front());
  for (const auto& t : v) {
    if (order.degree(t) != d) return std::nullopt;
  }
  return d;
}

FreeVector unit(std::size_t nvars, std::uint32_t comp, const FieldScalar& c) {
  if (c.is_zero()) return {};
  return {ModuleTerm{Monomial(nvars), comp, c}};
}

Polynomial component(const FreeVector& v, std::uint32_t comp, const PolyRingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.push_back(Term{t.mono, t.coeff});
  }
  return Polynomial(ring, std::move(terms));
}

FreeVector from_components(const std::vector<Polynomial>& entries, const ModuleOrder& order) {
  FreeVector out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const auto& t : entries[i].terms()) {
      out.push_back(ModuleTerm{t.mono, static_cast<std::uint32_t>(i), t.coeff});
    }
  }
  canonicalize(out, order);
  return out;
}

std::vector<Polynomial> to_components(const FreeVector& v, std::size_t rank, const PolyRingPtr& ring) {
  std::vector<std::vector<Term>> terms(rank);
  for (const auto& t : v) {
    if (t.comp >= rank) throw AlgebraError("component index out of range");
    terms[t.comp].push_back(Term{t.mono, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& ts : terms) out.emplace_back(ring, std::move(ts));
  return out;
}

FreeVector remap(const FreeVector& v, const std::vector<std::uint32_t>& map, const ModuleOrder& order) {
  FreeVector out(v);
  for (auto& t : out) t.comp = map[t.comp];
  canonicalize(out, order);
  return out;
}

bool equal(const FreeVector& a, const FreeVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].comp != b[i].comp || !(a[i].mono == b[i].mono) || !(a[i].coeff == b[i].coeff)) return false;
  }
  return true;
}

}  // namespace pdtensor::vec
