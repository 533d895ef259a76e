#pragma once

// Shared fixtures for the test executables.

#include <string>
#include <vector>

#include "pdtensor/catalog.hpp"
#include "pdtensor/functors.hpp"
#include "pdtensor/hilbert.hpp"
#include "pdtensor/oracle.hpp"
#include "pdtensor/random_module.hpp"
#include "pdtensor/resolution.hpp"
#include "pdtensor/theorems.hpp"

namespace testing {

using namespace pdtensor;

inline RingPtr poly_ring(const std::vector<std::string>& vars, const Field& f = Field::rationals()) {
  return quotient_ring(f, vars, {});
}

inline Polynomial P(const RingPtr& r, const std::string& text) { return r->parse(text); }

inline PresentedModule cyc(const RingPtr& r, const std::vector<std::string>& gens) {
  return cyclic_from_strings(r, gens);
}

inline PresentedModule R(const RingPtr& r) { return PresentedModule::free(r, {0}); }
inline PresentedModule k(const RingPtr& r) { return PresentedModule::residue_field(r); }

inline int min_twist(const PresentedModule& m) {
  int lo = 0;
  for (int t : m.twists()) lo = std::min(lo, t);
  return lo;
}

/// Hilbert function of M from the engine's Hilbert series and from the dense oracle.
inline std::vector<std::int64_t> engine_hf(const PresentedModule& m, int from, int to) {
  return hilbert_series(m).hf_range(from, to);
}
inline std::vector<std::int64_t> oracle_hf(const PresentedModule& m, int from, int to) {
  return oracle::hilbert_function(to_oracle(m), from, to);
}

/// Small random modules used throughout the property tests.
inline RandomModuleParams small_params(std::uint64_t seed) {
  RandomModuleParams p;
  p.min_generators = 1;
  p.max_generators = 2;
  p.min_relations = 0;
  p.max_relations = 2;
  p.max_twist = 1;
  p.monomial_bias = 0.4;
  p.seed = seed;
  return p;
}

inline std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace testing
