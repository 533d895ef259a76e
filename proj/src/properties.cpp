#include "pdtensor/properties.hpp"

#include "pdtensor/catalog.hpp"
#include "pdtensor/parallel.hpp"
#include "pdtensor/random_module.hpp"

namespace pdtensor {

int PropertySuiteResult::total_violations() const {
  int s = 0;
  for (const auto& t : tallies) s += t.violations;
  return s;
}

namespace {

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"thm-1.4i", "thm-1.4ii", "cor-1.5",  "fact-A.1",
                                               "thm-1.6",  "fact-3.6",  "fact-3.6"};
  return ids;
}

RandomModuleParams suite_params() {
  RandomModuleParams p;
  p.min_generators = 1;
  p.max_generators = 2;
  p.min_relations = 0;
  p.max_relations = 2;
  p.min_relation_degree = 1;
  p.max_relation_degree = 2;
  p.max_twist = 1;
  p.max_terms = 2;
  p.coefficient_range = 2;
  p.monomial_bias = 0.5;
  return p;
}

struct PairOutcome {
  std::vector<Verdict> verdicts;
  std::vector<std::pair<PresentedModule, PdVerdict>> pd;
};

PairOutcome run_pair(const RingPtr& ring, const std::vector<Polynomial>& nzd, std::uint64_t pair_seed) {
  SeededRng rng(pair_seed);
  RandomModuleParams params = suite_params();
  PresentedModule m = random_module(ring, params, rng);
  PresentedModule n = random_module(ring, params, rng);
  PairOutcome out;
  PresentedModule t = tensor_product(m, n);
  for (const PresentedModule* x : {&m, &n, &t}) out.pd.emplace_back(*x, decide_pd(*x));

  const int d = ring_dim(ring);
  PresentedModule high = d == 0 ? m : syzygy_module(m, d);
  std::vector<Polynomial> cut;
  if (!nzd.empty()) {
    const std::size_t count = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(nzd.size())));
    const std::size_t start = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nzd.size()) - 1));
    for (std::size_t i = 0; i < count; ++i) cut.push_back(nzd[(start + i) % nzd.size()]);
  }
  PresentedModule nf = PresentedModule::cyclic(ring, cut);

  std::vector<TheoremInputs> inputs(suite_ids().size());
  for (auto& in : inputs) {
    in.ring = ring;
    in.m = m;
    in.n = n;
  }
  inputs[4].m.reset();
  inputs[4].l = high;
  inputs[5].m = high;
  inputs[6].m = high;
  inputs[6].n = nf;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Verdict v = check_theorem_instance(suite_ids()[i], inputs[i]);
    v.seed = pair_seed;
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

}  // namespace

PropertySuiteResult run_property_suite(const std::string& ring_id, int pairs, std::uint64_t seed, int threads) {
  RingPtr ring = catalog_ring(ring_id);
  const std::vector<Polynomial> nzd = nzd_linear_basis(ring);
  std::vector<PairOutcome> outcomes(static_cast<std::size_t>(std::max(pairs, 0)));
  parallel_for(outcomes.size(), threads,
               [&](std::size_t i) { outcomes[i] = run_pair(ring, nzd, splitmix64(seed, i)); });
  PropertySuiteResult r;
  r.ring_id = ring_id;
  r.pairs = pairs;
  r.seed = seed;
  const auto& ids = suite_ids();
  // The two fact-3.6 runs share one tally.
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) r.tallies.push_back({ids[i]});
  for (auto& o : outcomes) {
    for (std::size_t i = 0; i < o.verdicts.size(); ++i) {
      const Verdict& v = o.verdicts[i];
      PropertyTally& t = r.tallies[std::min(i, r.tallies.size() - 1)];
      ++t.checked;
      if (v.outcome == Outcome::kBoundExceeded || v.outcome == Outcome::kInconclusive) {
        ++t.skipped;
        continue;
      }
      if (v.hypotheses_met()) ++t.hypothesis_met;
      if (v.critical()) {
        ++t.violations;
        r.violations.push_back(v);
      }
    }
    for (auto& s : o.pd) r.pd_samples.push_back(std::move(s));
  }
  return r;
}

bool recertify(const PresentedModule& m, const PdVerdict& v) {
  PresentedModule fresh(m.ring(), m.twists(), m.relations());
  switch (v.kind) {
    case PdVerdict::Kind::kMinusInfinity:
      return is_zero(fresh);
    case PdVerdict::Kind::kFinite: {
      Resolution r = minimal_resolution(fresh, v.value + 1);
      return r.betti.total(v.value + 1) == 0 && r.betti.total(v.value) != 0;
    }
    case PdVerdict::Kind::kInfinite: {
      const int d = ring_depth(m.ring());
      PresentedModule high = d == 0 ? fresh.minimal() : syzygy_module(fresh, d);
      if (is_free(high).free) return false;
      Resolution r = minimal_resolution(fresh, v.certificate_index);
      return r.betti.total(v.certificate_index) == v.certificate_rank && v.certificate_rank != 0;
    }
    case PdVerdict::Kind::kBoundExceeded:
      return false;
  }
  return false;
}

}  // namespace pdtensor
