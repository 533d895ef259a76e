#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdtensor/module.hpp"

namespace pdtensor {

/// beta_{i,j}: rank of the degree-j part of F_i in a minimal resolution.
struct BettiTable {
  std::map<std::pair<int, int>, int> entries;
  /// Highest homological index whose free module is known.
  int computed_to = 0;
  /// The resolution ended (F_{computed_to + 1} = 0).
  bool complete = false;

  int get(int i, int j) const;
  int total(int i) const;
  std::vector<int> totals() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Chain of free modules F_0 <- F_1 <- ... with d_i = differentials[i-1].
struct FreeComplex {
  RingPtr ring;
  std::vector<std::vector<int>> modules;
  std::vector<Matrix> differentials;
  bool is_minimal = false;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
  /// d_i o d_{i+1} = 0 for every pair, exactly.
  bool composes_to_zero() const;
  /// Every differential entry lies in 𝔪.
  bool all_entries_in_maximal_ideal() const;
};

struct Resolution {
  FreeComplex complex;
  BettiTable betti;
  /// The module actually resolved (a minimal presentation of the input).
  PresentedModule module;
};

/// Minimal graded free resolution through F_bound.
Resolution minimal_resolution(const PresentedModule& m, int bound);

/// Omega^i M for i >= 1, presented by the next differential.
PresentedModule syzygy_module(const PresentedModule& m, int i);

/// The same graded vector space as a module over the ambient ring S.
PresentedModule restrict_to_ambient(const PresentedModule& m);

/// nullopt is the infinite depth of the zero module.
std::optional<int> depth(const PresentedModule& m);
int ring_depth(const RingPtr& ring);
/// Projective dimension over the ambient polynomial ring S (finite), -1 for zero.
int ambient_pd(const PresentedModule& m);

struct PdVerdict {
  enum class Kind { kFinite, kInfinite, kMinusInfinity, kBoundExceeded };
  Kind kind = Kind::kFinite;
  int value = 0;               // kFinite: pd
  int certificate_index = 0;   // kInfinite: index depth(R)+1
  int certificate_rank = 0;    // kInfinite: beta at that index
  int bound = 0;               // kBoundExceeded: active degree cap
  std::string message;

  bool finite() const { return kind == Kind::kFinite; }
  bool infinite() const { return kind == Kind::kInfinite; }
  std::string to_string() const;
};

PdVerdict decide_pd(const PresentedModule& m);

}  // namespace pdtensor
