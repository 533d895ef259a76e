#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdtensor/functors.hpp"
#include "pdtensor/verdict.hpp"

namespace pdtensor {

struct TheoremInputs {
  RingPtr ring;
  std::optional<PresentedModule> m;
  std::optional<PresentedModule> n;
  /// The MCM module L of thm-1.6 (M defaults to Omega^1 L).
  std::optional<PresentedModule> l;
  /// Elements for fact-A.3.
  std::vector<Polynomial> sequence;
  /// Ext/Tor window and totally-reflexive bound.
  int bound = 4;
};

/// Known ids: thm-1.2, thm-1.4i, thm-1.4ii, cor-1.5, thm-1.6 (alias cor-3.10),
/// cor-3.7, cor-3.12, cor-3.13, fact-A.1, fact-A.3, prop-A.7, fact-3.6, fact-3.9.
std::vector<std::string> theorem_ids();

/// Evaluates the hypotheses first; the conclusion runs only when they hold.
/// Hypotheses met with a failed conclusion gives a CRITICAL verdict, which is
/// passed to record_critical. Throws AlgebraError for an unknown id or
/// missing inputs.
Verdict check_theorem_instance(std::string_view theorem_id, const TheoremInputs& inputs);

/// Comparison standard for claimed isomorphisms: graded Betti numbers in
/// homological degrees 0..2 and the Hilbert function up to degree `top`.
struct IsoComparison {
  bool equal = false;
  std::string left;
  std::string right;
};
IsoComparison compare_iso(const PresentedModule& a, const PresentedModule& b, int top = 6);

/// "Finite(p)", "Infinite" or "-inf": the verdict kind without its certificate.
std::string pd_kind(const PdVerdict& v);
std::string id_kind(const IdVerdict& v);

bool is_cohen_macaulay(const RingPtr& ring);
bool is_regular(const RingPtr& ring);
/// Linear forms that are nonzerodivisors on R and span the degree-one space,
/// or empty when the candidate pool has none.
std::vector<Polynomial> nzd_linear_basis(const RingPtr& ring);

}  // namespace pdtensor
