#include "pdtensor/random_module.hpp"

#include <algorithm>

namespace pdtensor {

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Rejection keeps the mapping exact.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

bool SeededRng::chance(double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

void validate(const RandomModuleParams& p) {
  auto check = [](int lo, int hi, int floor, const char* what) {
    if (lo < floor || hi < lo) throw AlgebraError(std::string("empty or invalid range for ") + what);
  };
  check(p.min_generators, p.max_generators, 1, "generator count");
  check(p.min_relations, p.max_relations, 0, "relation count");
  check(p.min_relation_degree, p.max_relation_degree, 1, "relation degree");
  if (p.max_twist < 0) throw AlgebraError("negative twist range");
  if (p.max_terms < 1) throw AlgebraError("max_terms must be positive");
  if (p.coefficient_range < 1) throw AlgebraError("coefficient_range must be positive");
}

Polynomial random_form(const RingPtr& ring, int degree, int max_terms, int coefficient_range, SeededRng& rng) {
  const auto& s = ring->ambient();
  const std::size_t n = ring->nvars();
  const int terms = static_cast<int>(rng.uniform(1, max_terms));
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m(n);
    for (int k = 0; k < degree; ++k) {
      std::size_t v = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      m.set(v, m[v] + 1);
    }
    std::int64_t c = rng.uniform(1, coefficient_range);
    if (rng.chance(0.5)) c = -c;
    out.push_back({m, s->scalar(c)});
  }
  return ring->reduce(Polynomial(s, std::move(out)));
}

PresentedModule random_module(const RingPtr& ring, const RandomModuleParams& params) {
  SeededRng rng(params.seed);
  return random_module(ring, params, rng);
}

PresentedModule random_module(const RingPtr& ring, const RandomModuleParams& params, SeededRng& rng) {
  validate(params);
  const auto& s = ring->ambient();
  const int g = static_cast<int>(rng.uniform(params.min_generators, params.max_generators));
  std::vector<int> twists(static_cast<std::size_t>(g));
  for (auto& t : twists) t = static_cast<int>(rng.uniform(0, params.max_twist));
  std::sort(twists.begin(), twists.end());
  const int low = twists.front();

  PresentedModule shell = PresentedModule::free(ring, twists);
  const int r = static_cast<int>(rng.uniform(params.min_relations, params.max_relations));
  std::vector<FreeVector> rels;
  for (int j = 0; j < r; ++j) {
    const int e = static_cast<int>(rng.uniform(params.min_relation_degree, params.max_relation_degree));
    const int column_degree = low + e;
    std::vector<Polynomial> entries(static_cast<std::size_t>(g), Polynomial(s));
    const std::size_t forced = static_cast<std::size_t>(rng.uniform(0, g - 1));
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const int d = column_degree - twists[i];
      const bool wanted = rng.chance(params.density);
      if (d < 1 || (!wanted && i != forced)) continue;
      if (rng.chance(params.monomial_bias)) {
        entries[i] = random_form(ring, d, 1, 1, rng);
        entries[i] = entries[i].is_zero() ? entries[i] : entries[i].scaled(entries[i].lead().coeff.inverse());
      } else {
        entries[i] = random_form(ring, d, params.max_terms, params.coefficient_range, rng);
      }
    }
    rels.push_back(vec::from_components(entries, shell.order()));
  }
  return PresentedModule(ring, twists, std::move(rels));
}

}  // namespace pdtensor
