#include "pdtensor/hunt.hpp"

#include <mutex>
#include <optional>

#include "pdtensor/parallel.hpp"
#include "pdtensor/theorems.hpp"

namespace pdtensor {

RandomModuleParams hunt_default_params() {
  RandomModuleParams p;
  p.min_generators = 1;
  p.max_generators = 1;
  p.min_relations = 1;
  p.max_relations = 2;
  p.min_relation_degree = 1;
  p.max_relation_degree = 2;
  p.max_terms = 2;
  p.coefficient_range = 1;
  p.monomial_bias = 0.85;
  return p;
}

namespace {

enum class Skip { kNone, kZero, kBound, kInfiniteTensor, kFiniteFactor };

struct Trial {
  Skip skip = Skip::kNone;
  std::optional<Verdict> verdict;
};

Trial run_trial(const RingPtr& ring, const RandomModuleParams& params, std::uint64_t trial_seed, int index) {
  Trial out;
  SeededRng rng(trial_seed);
  PresentedModule m = random_module(ring, params, rng);
  PresentedModule n = random_module(ring, params, rng);
  try {
    PresentedModule t = tensor_product(m, n);
    if (is_zero(t)) {
      out.skip = Skip::kZero;
      return out;
    }
    PdVerdict pt = decide_pd(t);
    if (pt.kind == PdVerdict::Kind::kBoundExceeded) throw BoundExceeded(pt.message, pt.bound);
    if (!pt.finite()) {
      out.skip = Skip::kInfiniteTensor;
      return out;
    }
    out.skip = Skip::kFiniteFactor;
    PdVerdict pm = decide_pd(m), pn = decide_pd(n);
    if (pm.kind == PdVerdict::Kind::kBoundExceeded) throw BoundExceeded(pm.message, pm.bound);
    if (pn.kind == PdVerdict::Kind::kBoundExceeded) throw BoundExceeded(pn.message, pn.bound);
    if (!pm.infinite() || !pn.infinite()) return out;

    Verdict v;
    v.id = "hunt-" + std::to_string(index);
    v.kind = "hunt";
    v.ring = ring->description();
    v.seed = trial_seed;
    v.record("M", m.minimal().to_string());
    v.record("N", n.minimal().to_string());
    v.record("M (x) N", t.minimal().to_string());
    v.record("pd(M (x) N)", pd_kind(pt));
    v.certificate("pd M", "beta_" + std::to_string(pm.certificate_index) + " = " + std::to_string(pm.certificate_rank));
    v.certificate("pd N", "beta_" + std::to_string(pn.certificate_index) + " = " + std::to_string(pn.certificate_rank));
    // Finite pd(M (x) N) with both factors of infinite pd forces some Tor_i != 0 with 1 <= i <= pd.
    const int p = pt.value;
    bool some = false;
    std::string summary = "none";
    if (p >= 1) {
      TorProfile tp = tor(m, n, p);
      some = !tp.vanishes_between(1, p);
      summary = tp.summary();
    }
    v.check("some Tor_i(M,N) != 0 for 1 <= i <= " + std::to_string(p), some, "true", summary);
    TheoremInputs in;
    in.ring = ring;
    in.m = m;
    in.n = n;
    for (const char* id : {"thm-1.4i", "thm-1.4ii"}) {
      Verdict audit = check_theorem_instance(id, in);
      v.check(std::string(id) + " hypotheses fail on the kept pair", audit.outcome == Outcome::kHypothesisNotMet,
              outcome_name(Outcome::kHypothesisNotMet), outcome_name(audit.outcome));
    }
    v.outcome = v.conclusions_hold() ? Outcome::kPass : Outcome::kCritical;
    if (v.critical()) record_critical(v);
    out.skip = Skip::kNone;
    out.verdict = std::move(v);
  } catch (const BoundExceeded&) {
    out.skip = Skip::kBound;
  }
  return out;
}

}  // namespace

HuntReport hunt(const RingPtr& ring, int trials, const RandomModuleParams& params, std::uint64_t seed, int threads) {
  if (trials < 1) throw AlgebraError("hunt needs at least one trial");
  validate(params);
  std::vector<Trial> results(static_cast<std::size_t>(trials));
  parallel_for(results.size(), threads, [&](std::size_t i) {
    results[i] = run_trial(ring, params, splitmix64(seed, i), static_cast<int>(i));
  });
  HuntReport r;
  r.trials = trials;
  for (auto& t : results) {
    if (t.skip == Skip::kZero) ++r.zero_tensor;
    if (t.skip == Skip::kBound) ++r.bound_exceeded;
    if (t.skip == Skip::kFiniteFactor || t.verdict) ++r.finite_tensor;
    if (t.verdict) r.kept.push_back(std::move(*t.verdict));
  }
  return r;
}

}  // namespace pdtensor
