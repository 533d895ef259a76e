// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "pdtensor/catalog.hpp"
#include "pdtensor/instances.hpp"
#include "pdtensor/parallel.hpp"
#include "pdtensor/properties.hpp"
#include "pdtensor/random_module.hpp"

using namespace pdtensor;

namespace {

struct Criterion {
  bool ok = true;
  std::ostringstream log;

  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << " [failed: " << what << "]";
    }
  }
};

int threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

PresentedModule cyc(const RingPtr& r, std::vector<std::string> g) { return cyclic_from_strings(r, g); }

std::vector<std::pair<PresentedModule, PdVerdict>> g_pd_samples;

void record_pd(const PresentedModule& m, const PdVerdict& v) { g_pd_samples.emplace_back(m, v); }

PdVerdict pd(const PresentedModule& m) {
  PdVerdict v = decide_pd(m);
  record_pd(m, v);
  return v;
}

bool is_finite(const PdVerdict& v, int p) { return v.finite() && v.value == p; }

void c1(Criterion& o) {
  PaperInstance in = paper_instance("ex-2.5");
  const auto& M = in.module("M");
  const auto& N = in.module("N");
  auto t = tensor_product(M, N);
  auto pt = pd(t), pm = pd(M), pn = pd(N);
  o.need(is_finite(pt, 2), "pd(M (x) N) = 2, got " + pt.to_string());
  o.need(pm.infinite() && pm.certificate_index == 3, "pd M infinite at index 3, got " + pm.to_string());
  o.need(pn.infinite(), "pd N infinite, got " + pn.to_string());
  o.need(compare_iso(t, in.module("C")).equal, "M (x) N matches R/(y,z)");
  o.need(run_example("ex-2.5").outcome == pdtensor::Outcome::kPass, "encoded example passes");
  o.log << " pd(M (x) N)=" << pt.to_string() << ", pd M=" << pm.to_string() << ", pd N=" << pn.to_string();
}

void c2(Criterion& o) {
  PaperInstance in = paper_instance("ex-2.7");
  const auto& M = in.module("M");
  const auto& N = in.module("N");
  auto pt = pd(tensor_product(M, N));
  o.need(is_finite(pt, 2), "pd(M (x) N) = 2, got " + pt.to_string());
  auto rm = totally_reflexive_check(M, 4), rn = totally_reflexive_check(N, 4);
  o.need(!rm.confirmed && rm.refuted_at <= 4, "M refuted at i <= 4");
  o.need(!rn.confirmed && rn.refuted_at <= 4, "N refuted at i <= 4");
  auto g = betti_growth_report(M, 8);
  o.need(g.strictly_increasing(2, 8), "b_{i+1} > b_i for 2 <= i <= 8");
  o.need(g.betti[8] >= 4 * g.betti[2], "b_8 / b_2 >= 4");
  o.log << " pd(M (x) N)=" << pt.to_string() << ", M " << rm.to_string() << ", N " << rn.to_string() << ", b2..b8 =";
  for (int i = 2; i <= 8; ++i) o.log << " " << g.betti[i];
}

void c3(Criterion& o) {
  PaperInstance in = paper_instance("ex-2.1");
  const auto& M = in.module("M");
  o.need(M.ring()->field().is_rational(), "characteristic 0");
  auto t1 = tensor_product(M, in.module("N1"));
  auto p1 = pd(t1);
  o.need(compare_iso(t1, M).equal, "M (x) N1 matches M");
  o.need(is_finite(p1, 1), "pd(M (x) N1) = 1, got " + p1.to_string());
  auto p2 = pd(tensor_product(M, in.module("N2")));
  o.need(p2.infinite(), "pd(M (x) N2) infinite, got " + p2.to_string());
  o.log << " (i) pd=" << p1.to_string() << ", (ii) pd=" << p2.to_string();
}

void c4(Criterion& o) {
  PaperInstance in = paper_instance("ex-2.4");
  const auto& M = in.module("M");
  // The transpose is defined up to a twist; generate N in degree 0.
  int lo = 0;
  for (int t : in.module("N").twists()) lo = std::min(lo, t);
  const PresentedModule N = shift(in.module("N"), lo);
  auto pm = pd(M), pn = pd(N), pnn = pd(tensor_product(N, N));
  auto t = tensor_product(M, N);
  auto pt = pd(t);
  o.need(is_finite(pm, 3), "pd M = 3, got " + pm.to_string());
  o.need(is_finite(pn, 1), "pd N = 1, got " + pn.to_string());
  o.need(is_finite(pnn, 2), "pd(N (x) N) = 2, got " + pnn.to_string());
  o.need(pt.infinite(), "pd(M (x) N) infinite, got " + pt.to_string());
  const RingPtr& r = M.ring();
  auto target = direct_sum(direct_sum(M, M), PresentedModule::residue_field(r));
  o.need(hilbert_series(t).hf_range(0, 6) == hilbert_series(target).hf_range(0, 6), "HF(M (x) N) = HF(M+M+k)");
  const auto b0 = t.minimal().num_generators(), bm = M.minimal().num_generators();
  o.need(b0 == 2 * bm + 1, "beta_0(M (x) N) = 2 beta_0(M) + 1");
  o.log << " pd M=" << pm.to_string() << ", pd N=" << pn.to_string() << ", pd(N (x) N)=" << pnn.to_string()
        << ", pd(M (x) N)=" << pt.to_string() << ", beta_0(M (x) N)=" << b0;
}

void c5(Criterion& o) {
  PaperInstance in = paper_instance("ex-A.8");
  const auto& I = in.module("I");
  auto pi = pd(I);
  o.need(is_finite(pi, 1), "pd I = 1, got " + pi.to_string());
  auto t = tor(I, I, 4);
  o.need(t.vanishes_between(1, 4), "Tor_{1..4}(I,I) = 0, got " + t.summary());
  auto ii = tensor_product(I, I);
  auto pii = pd(ii);
  o.need(pii.finite(), "pd(I (x) I) finite");
  auto id = decide_id(ii);
  o.need(id.finite() && id.value == 2, "id(I (x) I) = 2, got " + id.to_string());
  o.log << " pd I=" << pi.to_string() << ", Tor " << t.summary() << ", pd(I (x) I)=" << pii.to_string()
        << ", id(I (x) I)=" << id.to_string();
}

void c6(Criterion& o) {
  for (const char* id : {"R1", "R3", "R4", "R5", "R6"}) {
    PropertySuiteResult r = run_property_suite(id, 200, splitmix64(6, std::string(id).back()), threads());
    o.need(r.total_violations() == 0, std::string(id) + " has violations");
    for (const auto& s : r.pd_samples) g_pd_samples.push_back(s);
    o.log << " " << id << ":";
    for (const auto& t : r.tallies) o.log << " " << t.theorem_id << " " << t.hypothesis_met << "/" << t.checked;
    o.log << " violations " << r.total_violations() << ";";
  }
}

void c7(Criterion& o) {
  int pairs = 0, bad = 0;
  for (const auto& id : example_ids()) {
    PaperInstance in = paper_instance(id);
    for (const auto& [a, m] : in.modules) {
      for (const auto& [b, n] : in.modules) {
        ++pairs;
        if (!oracle_compare(m, n, 6).agree) {
          ++bad;
          o.need(false, id + " " + a + "," + b);
        }
      }
    }
  }
  RandomModuleParams p;
  p.min_relations = 0;
  p.max_twist = 1;
  p.monomial_bias = 0.4;
  for (const char* id : {"R1", "R3", "R4", "R5", "R6"}) {
    RingPtr ring = catalog_ring(id);
    std::vector<char> agree(50, 1);
    parallel_for(50, threads(), [&](std::size_t t) {
      SeededRng rng(splitmix64(7, t + 100 * static_cast<std::uint64_t>(std::string(id).back())));
      auto m = random_module(ring, p, rng);
      auto n = random_module(ring, p, rng);
      agree[t] = oracle_compare(m, n, 6).agree;
    });
    for (char a : agree) {
      ++pairs;
      if (!a) ++bad;
    }
  }
  o.need(bad == 0, std::to_string(bad) + " disagreements");
  o.log << " " << pairs << " pairs compared, " << bad << " disagreements";
}

void c8(Criterion& o) {
  for (const auto& id : example_ids()) {
    PaperInstance in = paper_instance(id);
    for (const auto& [a, m] : in.modules) {
      record_pd(m, decide_pd(m));
      for (const auto& [b, n] : in.modules) {
        auto t = tensor_product(m, n);
        record_pd(t, decide_pd(t));
      }
    }
  }
  std::vector<char> ok(g_pd_samples.size(), 1);
  parallel_for(ok.size(), threads(), [&](std::size_t i) { ok[i] = recertify(g_pd_samples[i].first, g_pd_samples[i].second); });
  int finite = 0, infinite = 0, failures = 0;
  for (std::size_t i = 0; i < ok.size(); ++i) {
    finite += g_pd_samples[i].second.finite();
    infinite += g_pd_samples[i].second.infinite();
    failures += !ok[i];
  }
  o.need(failures == 0, std::to_string(failures) + " verdicts did not recertify");
  o.log << " " << ok.size() << " verdicts (" << finite << " finite, " << infinite << " infinite), " << failures
        << " failures";
}

void c9(Criterion& o) {
  RingPtr r1 = catalog_ring("R1");
  auto a = cyc(r1, {"x+y"}), b = cyc(r1, {"x-y"});
  auto hf = hilbert_series(tensor_product(a, b)).hf_range(0, 6);
  o.need(hf == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0}, "HF = 1,0,0,...");
  TheoremInputs in;
  in.ring = r1;
  in.sequence = {r1->parse("x+y"), r1->parse("x-y")};
  o.need(check_theorem_instance("fact-A.3", in).outcome == pdtensor::Outcome::kPass, "fact-A.3 check passes");
  o.log << " HF =";
  for (auto x : hf) o.log << " " << x;
}

std::string capture(const std::string& cmd, int& code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  char buf[65536];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void c10(Criterion& o) {
  const std::string base = std::string(PDTENSOR_BINARY) + " --format machine --seed 42";
  int c1 = 0, c2 = 0, c3 = 0;
  const std::string a = capture(base + " paper --all", c1);
  const std::string b = capture(base + " paper --all", c2);
  const std::string c = capture(base + " --threads 4 paper --all", c3);
  o.need(c1 == 0 && c2 == 0 && c3 == 0, "exit codes 0");
  o.need(!a.empty() && a == b, "two runs byte-identical");
  o.need(a == c, "thread count does not change the report");
  o.log << " " << a.size() << " bytes per report";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"ex-2.5 reproduction", c1},   {"ex-2.7 reproduction", c2}, {"ex-2.1 reproduction", c3},
      {"ex-2.4 reproduction", c4},   {"ex-A.8 reproduction", c5}, {"theorem property suites", c6},
      {"oracle equivalence", c7},         {"certification soundness", c8},  {"fact-A.3 instance", c9},
      {"determinism of paper --all", c10}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.log << " [exception: " << e.what() << "]";
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << "."
              << o.log.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
