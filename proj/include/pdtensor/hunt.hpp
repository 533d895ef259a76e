#pragma once

#include <cstdint>
#include <vector>

#include "pdtensor/random_module.hpp"
#include "pdtensor/verdict.hpp"

namespace pdtensor {

/// Cyclic modules cut out by one or two mostly monomial relations of degree 1..2.
RandomModuleParams hunt_default_params();

struct HuntReport {
  int trials = 0;
  int zero_tensor = 0;
  int bound_exceeded = 0;
  /// Pairs with finite pd(M (x) N), before the infinite-pd filter.
  int finite_tensor = 0;
  /// Kept pairs, in trial order.
  std::vector<Verdict> kept;
};

/// Trial t draws M then N from a generator seeded with splitmix64(seed, t),
/// so results do not depend on the thread count.
HuntReport hunt(const RingPtr& ring, int trials, const RandomModuleParams& params, std::uint64_t seed,
                int threads = 1);

}  // namespace pdtensor
