#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdtensor/hilbert.hpp"
#include "pdtensor/resolution.hpp"

namespace pdtensor {

/// Graded pieces of Tor_i or Ext^i for i = 0..top.
struct FunctorProfile {
  int top = 0;
  std::vector<PresentedModule> modules;
  std::vector<HilbertSeries> series;

  bool vanishes(int i) const { return series.at(static_cast<std::size_t>(i)).dim < 0; }
  /// Vanishing for every index in [from, to].
  bool vanishes_between(int from, int to) const;
  std::vector<std::int64_t> dims(int i, int from, int to) const;
  /// e.g. "0:nz 1:0 2:0"
  std::string summary() const;
};
using TorProfile = FunctorProfile;
using ExtProfile = FunctorProfile;

/// Homology of (minimal resolution of M) tensor N.
TorProfile tor(const PresentedModule& m, const PresentedModule& n, int top);
/// Cohomology of Hom(minimal resolution of M, N).
ExtProfile ext(const PresentedModule& m, const PresentedModule& n, int top);

/// X_n = sum_{i+j=n} P_i (x) Q_j, d(p (x) q) = dp (x) q + (-1)^i p (x) dq.
FreeComplex total_tensor_complex(const FreeComplex& p, const FreeComplex& q);
/// ker d_i / im d_{i+1}; valid for 0 <= i <= length.
PresentedModule complex_homology(const FreeComplex& x, int i);

/// Ext^{n-d}_S(R, S(-n)) as an R-module. Throws unless R is Cohen-Macaulay.
PresentedModule canonical_module(const RingPtr& ring);

struct IdVerdict {
  enum class Kind { kFinite, kInfinite, kBoundExceeded };
  Kind kind = Kind::kFinite;
  int value = 0;
  int certificate_index = 0;
  std::int64_t certificate_rank = 0;
  std::vector<std::int64_t> bass;
  int bound = 0;
  std::string message;

  bool finite() const { return kind == Kind::kFinite; }
  bool infinite() const { return kind == Kind::kInfinite; }
  std::string to_string() const;
};

/// mu^i(M) = dim_k Ext^i(k, M) for i = 0..top.
std::vector<std::int64_t> bass_numbers(const PresentedModule& m, int top);
/// Throws AlgebraError for the zero module.
IdVerdict decide_id(const PresentedModule& m);

struct ReflexivityCheck {
  bool confirmed = false;
  int bound = 0;
  /// Smallest failing index; 0 means the biduality map failed.
  int refuted_at = -1;
  std::string side;
  bool biduality = false;
  /// First i <= bound with Ext^i(M,R) != 0, resp. Ext^i(Tr M,R) != 0; -1 if none.
  int ext_index = -1;
  int transpose_ext_index = -1;
  std::string to_string() const;
};
ReflexivityCheck totally_reflexive_check(const PresentedModule& m, int bound = 4);

struct BettiGrowth {
  std::vector<int> betti;
  std::vector<double> ratios;
  /// b_{i+1} > b_i for from <= i < to.
  bool strictly_increasing(int from, int to) const;
};
BettiGrowth betti_growth_report(const PresentedModule& m, int window);

/// M_p free for every non-maximal homogeneous prime p, via finite length of Ext^1(M, Omega M).
bool locally_free_on_punctured_spectrum(const PresentedModule& m);

}  // namespace pdtensor
