#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pdtensor/module.hpp"

namespace pdtensor {

/// Seed derivation for independent streams (trial t of a run seeded s uses splitmix64(s, t)).
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 with explicit integer mappings, so a seed gives the same
/// draws under every standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

struct RandomModuleParams {
  int min_generators = 1;
  int max_generators = 2;
  int min_relations = 1;
  int max_relations = 2;
  /// Degree of a relation entry against a generator of twist 0.
  int min_relation_degree = 1;
  int max_relation_degree = 2;
  /// Generator twists are drawn from [0, max_twist].
  int max_twist = 0;
  int max_terms = 2;
  int coefficient_range = 3;
  /// Probability that a nonzero entry is a bare monomial.
  double monomial_bias = 0.0;
  /// Probability that an entry is nonzero (each relation keeps at least one).
  double density = 0.7;
  std::uint64_t seed = 0;
};

/// Throws AlgebraError on an empty or negative range.
void validate(const RandomModuleParams& params);

/// Homogeneous presentation with entries in the maximal ideal.
PresentedModule random_module(const RingPtr& ring, const RandomModuleParams& params);

/// Deterministic draw from an already seeded stream.
PresentedModule random_module(const RingPtr& ring, const RandomModuleParams& params, SeededRng& rng);

/// A random homogeneous form of the given degree (nonzero for degree >= 0 unless it dies modulo I).
Polynomial random_form(const RingPtr& ring, int degree, int max_terms, int coefficient_range, SeededRng& rng);

}  // namespace pdtensor
