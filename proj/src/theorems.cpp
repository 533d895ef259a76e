#include "pdtensor/theorems.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace pdtensor {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "pass";
    case Outcome::kFail:
      return "fail";
    case Outcome::kHypothesisNotMet:
      return "hypothesis not met";
    case Outcome::kCritical:
      return "CRITICAL";
    case Outcome::kInconclusive:
      return "inconclusive";
    case Outcome::kBoundExceeded:
      return "bound exceeded";
  }
  return "?";
}

bool Verdict::hypotheses_met() const {
  for (const auto& h : hypotheses) {
    if (!h.passed) return false;
  }
  return true;
}

bool Verdict::conclusions_hold() const {
  for (const auto& a : assertions) {
    if (a.asserted && !a.passed) return false;
  }
  return true;
}

void Verdict::expect(std::string name, std::string expected, std::string computed, std::string detail) {
  const bool ok = expected == computed;
  check(std::move(name), ok, std::move(expected), std::move(computed), std::move(detail));
}

void Verdict::check(std::string name, bool ok, std::string expected, std::string computed, std::string detail) {
  Assertion a{std::move(name), std::move(expected), std::move(computed), true, ok, {}};
  if (!ok) a.detail = std::move(detail);
  assertions.push_back(std::move(a));
}

bool Verdict::hypothesis(std::string name, bool ok, std::string computed) {
  hypotheses.push_back({std::move(name), "true", std::move(computed), true, ok, {}});
  return ok;
}

void Verdict::record(std::string name, std::string computed) {
  assertions.push_back({std::move(name), "", std::move(computed), false, true, {}});
}

namespace {

std::mutex& critical_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Verdict>& critical_store() {
  static std::vector<Verdict> store;
  return store;
}

}  // namespace

void record_critical(const Verdict& v) {
  std::lock_guard lock(critical_mutex());
  critical_store().push_back(v);
  const char* env = std::getenv("PDTENSOR_CRITICAL_LOG");
  std::ofstream out(env && *env ? env : "pdtensor-critical.log", std::ios::app);
  out << "CRITICAL " << v.id << " over " << v.ring << " seed " << v.seed << "\n";
  for (const auto& h : v.hypotheses) out << "  hypothesis " << h.name << ": " << h.computed << "\n";
  for (const auto& a : v.assertions) {
    out << "  " << (a.passed ? "ok " : "FAILED ") << a.name << ": expected " << a.expected << ", computed "
        << a.computed << "\n";
    if (!a.detail.empty()) out << "    " << a.detail << "\n";
  }
}

std::vector<Verdict> critical_verdicts() {
  std::lock_guard lock(critical_mutex());
  return critical_store();
}

std::string pd_kind(const PdVerdict& v) {
  switch (v.kind) {
    case PdVerdict::Kind::kFinite:
      return "Finite(" + std::to_string(v.value) + ")";
    case PdVerdict::Kind::kInfinite:
      return "Infinite";
    case PdVerdict::Kind::kMinusInfinity:
      return "-inf";
    case PdVerdict::Kind::kBoundExceeded:
      return "BoundExceeded";
  }
  return "?";
}

std::string id_kind(const IdVerdict& v) {
  switch (v.kind) {
    case IdVerdict::Kind::kFinite:
      return "Finite(" + std::to_string(v.value) + ")";
    case IdVerdict::Kind::kInfinite:
      return "Infinite";
    case IdVerdict::Kind::kBoundExceeded:
      return "BoundExceeded";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string fingerprint(const PresentedModule& m, int lo, int top) {
  std::ostringstream os;
  if (is_zero(m)) {
    os << "betti{} hf[" << lo << ".." << top << "]=" << join(std::vector<std::int64_t>(top - lo + 1, 0));
    return os.str();
  }
  Resolution r = minimal_resolution(m, 2);
  os << "betti{";
  bool first = true;
  for (const auto& [key, b] : r.betti.entries) {
    if (key.first > 2 || b == 0) continue;
    os << (first ? "" : " ") << key.first << "," << key.second << ":" << b;
    first = false;
  }
  os << "} hf[" << lo << ".." << top << "]=" << join(hilbert_series(m).hf_range(lo, top));
  return os.str();
}

int lowest_twist(const PresentedModule& m, int fallback) {
  const auto& t = m.minimal().twists();
  int lo = fallback;
  for (int x : t) lo = std::min(lo, x);
  return lo;
}

}  // namespace

IsoComparison compare_iso(const PresentedModule& a, const PresentedModule& b, int top) {
  const int lo = std::min(lowest_twist(a, 0), lowest_twist(b, 0));
  IsoComparison c;
  c.left = fingerprint(a, lo, top);
  c.right = fingerprint(b, lo, top);
  c.equal = c.left == c.right;
  return c;
}

bool is_cohen_macaulay(const RingPtr& ring) { return ring_depth(ring) == ring_dim(ring); }

bool is_regular(const RingPtr& ring) {
  if (ring->is_polynomial_ring()) return true;
  PdVerdict v = decide_pd(PresentedModule::residue_field(ring));
  if (v.kind == PdVerdict::Kind::kBoundExceeded) throw BoundExceeded(v.message, v.bound);
  return v.finite();
}

namespace {

/// Incremental row echelon over the ground field for linear independence of linear forms.
class LinearSpan {
 public:
  explicit LinearSpan(std::size_t n) : n_(n) {}
  /// Adds the coefficient vector when it is independent; returns whether it was.
  bool add(std::vector<FieldScalar> v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      FieldScalar c = v[pivot];
      for (std::size_t j = 0; j < n_; ++j) v[j] -= c * row[j];
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j].is_zero()) continue;
      FieldScalar inv = v[j].inverse();
      for (auto& x : v) x *= inv;
      for (auto& [pivot, row] : rows_) {
        if (row[j].is_zero()) continue;
        FieldScalar c = row[j];
        for (std::size_t k = 0; k < n_; ++k) row[k] -= c * v[k];
      }
      rows_.emplace(j, std::move(v));
      return true;
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::map<std::size_t, std::vector<FieldScalar>> rows_;
};

std::vector<FieldScalar> linear_coefficients(const Polynomial& p, std::size_t n) {
  std::vector<FieldScalar> v(n, FieldScalar::zero(p.ring()->field()));
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != 1) throw AlgebraError("not a linear form: " + p.to_string());
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] == 1) v[i] = t.coeff;
    }
  }
  return v;
}

}  // namespace

std::vector<Polynomial> nzd_linear_basis(const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  PresentedModule r = PresentedModule::free(ring, {0});
  std::vector<Polynomial> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(ring->variable(i));
  for (int c : {1, -1, 2, -2, 3}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) pool.push_back(ring->variable(i) + ring->variable(j).scaled(ring->scalar(c)));
      }
    }
  }
  LinearSpan span(n);
  std::vector<Polynomial> out;
  for (const auto& p : pool) {
    if (span.rank() == n) break;
    if (!nzd_test(p, r)) continue;
    if (span.add(linear_coefficients(p, n))) out.push_back(p);
  }
  if (span.rank() < n) return {};
  return out;
}

namespace {

struct Inconclusive {
  std::string why;
};

PdVerdict pd_of(const PresentedModule& m) {
  PdVerdict v = decide_pd(m);
  if (v.kind == PdVerdict::Kind::kBoundExceeded) throw BoundExceeded(v.message, v.bound);
  return v;
}

IdVerdict id_of(const PresentedModule& m) {
  IdVerdict v = decide_id(m);
  if (v.kind == IdVerdict::Kind::kBoundExceeded) throw BoundExceeded(v.message, v.bound);
  return v;
}

const PresentedModule& need(const std::optional<PresentedModule>& m, const char* what) {
  if (!m) throw AlgebraError(std::string("theorem check needs module ") + what);
  return *m;
}

std::string yes(bool b) { return b ? "true" : "false"; }

void certify(Verdict& v, const std::string& name, const PdVerdict& pd) {
  if (pd.infinite()) v.certificate(name, "beta_" + std::to_string(pd.certificate_index) + " = " +
                                             std::to_string(pd.certificate_rank));
}

void certify(Verdict& v, const std::string& name, const IdVerdict& id) {
  if (id.infinite()) v.certificate(name, "mu^" + std::to_string(id.certificate_index) + " = " +
                                             std::to_string(id.certificate_rank));
}

bool finite_at_most(const PdVerdict& v, int n) { return v.finite() && v.value <= n; }

void check_thm_1_2(const TheoremInputs& in, Verdict& v) {
  const RingPtr& R = in.ring;
  const int d = ring_depth(R);
  const bool regular = is_regular(R);
  v.record("depth R", std::to_string(d));
  v.record("R regular", yes(regular));
  if (d == 0 || regular) {
    // Condition (iii) holds, so finite pd must pass to tensor products.
    const auto& M = need(in.m, "M");
    const auto& N = need(in.n, "N");
    v.hypothesis("depth R = 0 or R regular", true, "depth " + std::to_string(d) + ", regular " + yes(regular));
    PdVerdict pm = pd_of(M), pn = pd_of(N);
    if (!v.hypothesis("pd M finite", pm.finite(), pd_kind(pm))) return;
    if (!v.hypothesis("pd N finite", pn.finite(), pd_kind(pn))) return;
    PdVerdict pt = pd_of(tensor_product(M, N));
    v.check("pd(M (x) N) finite", !pt.infinite(), "finite or -inf", pd_kind(pt));
    return;
  }
  v.hypothesis("depth R >= 1 and R not regular", true, "depth " + std::to_string(d));
  std::vector<Polynomial> basis = nzd_linear_basis(R);
  if (basis.empty()) throw Inconclusive{"no nonzerodivisor linear basis in the candidate pool"};
  std::string seq;
  for (const auto& x : basis) seq += (seq.empty() ? "" : ", ") + x.to_string();
  v.record("nonzerodivisor sequence", seq);
  // The iterated tensor product of R/(x_i) is k, so some prefix first loses finite pd.
  std::vector<Polynomial> prefix;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    PresentedModule M = PresentedModule::cyclic(R, prefix);
    PresentedModule N = PresentedModule::cyclic(R, {basis[j]});
    PdVerdict pm = pd_of(M);
    PdVerdict pn = pd_of(N);
    PdVerdict pt = pd_of(tensor_product(M, N));
    if (pm.finite() && pn.finite() && pt.infinite()) {
      std::string pre;
      for (const auto& x : prefix) pre += (pre.empty() ? "" : ", ") + x.to_string();
      v.record("witness M", "R/(" + pre + ") pd " + pd_kind(pm));
      v.record("witness N", "R/(" + basis[j].to_string() + ") pd " + pd_kind(pn));
      certify(v, "pd(M (x) N)", pt);
      v.check("cyclic witness with finite pd factors and infinite pd tensor", true, "found", "found");
      return;
    }
    prefix.push_back(basis[j]);
  }
  v.check("cyclic witness with finite pd factors and infinite pd tensor", false, "found", "none");
}

void check_thm_1_4i(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  const auto& N = need(in.n, "N");
  PresentedModule T = tensor_product(M, N);
  if (!v.hypothesis("M (x) N != 0", !is_zero(T), yes(!is_zero(T)))) return;
  PdVerdict pt = pd_of(T);
  if (!v.hypothesis("pd(M (x) N) finite", pt.finite(), pd_kind(pt))) return;
  const int n = pt.value;
  if (n >= 1) {
    TorProfile t = tor(M, N, n);
    if (!v.hypothesis("Tor_i(M,N) = 0 for 1 <= i <= " + std::to_string(n), t.vanishes_between(1, n), t.summary()))
      return;
  }
  PdVerdict pm = pd_of(M), pn = pd_of(N);
  certify(v, "pd M", pm);
  certify(v, "pd N", pn);
  v.check("pd M <= " + std::to_string(n), finite_at_most(pm, n), "Finite(<= " + std::to_string(n) + ")", pd_kind(pm),
          M.to_string());
  v.check("pd N <= " + std::to_string(n), finite_at_most(pn, n), "Finite(<= " + std::to_string(n) + ")", pd_kind(pn),
          N.to_string());
}

void free_and_finite(const PresentedModule& M, const PresentedModule& N, Verdict& v) {
  FreeInfo f = is_free(M);
  PdVerdict pn = pd_of(N);
  certify(v, "pd N", pn);
  v.check("M free", f.free, "true", yes(f.free), M.minimal().to_string());
  v.check("pd N finite", pn.finite(), "Finite", pd_kind(pn), N.to_string());
}

void check_thm_1_4ii(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  const auto& N = need(in.n, "N");
  PresentedModule T = tensor_product(M, N);
  if (!v.hypothesis("M (x) N != 0", !is_zero(T), yes(!is_zero(T)))) return;
  PdVerdict pt = pd_of(T);
  if (!v.hypothesis("pd(M (x) N) finite", pt.finite(), pd_kind(pt))) return;
  const int n = pt.value;
  if (n >= 1) {
    ExtProfile e = ext(M, PresentedModule::free(in.ring, {0}), n);
    if (!v.hypothesis("Ext^i(M,R) = 0 for 1 <= i <= " + std::to_string(n), e.vanishes_between(1, n), e.summary()))
      return;
  }
  free_and_finite(M, N, v);
}

void check_cor_1_5(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  const auto& N = need(in.n, "N");
  if (!v.hypothesis("M != 0", !is_zero(M), yes(!is_zero(M)))) return;
  if (!v.hypothesis("N != 0", !is_zero(N), yes(!is_zero(N)))) return;
  PdVerdict pt = pd_of(tensor_product(M, N));
  if (!v.hypothesis("pd(M (x) N) finite", pt.finite(), pd_kind(pt))) return;
  // A bound of at least pd(M (x) N) makes the bounded check cover the Ext range the proof uses.
  ReflexivityCheck r = totally_reflexive_check(M, std::max(in.bound, std::max(pt.value, 1)));
  if (!v.hypothesis("M totally reflexive (bounded)", r.confirmed, r.to_string())) return;
  free_and_finite(M, N, v);
}

void check_thm_1_6(const TheoremInputs& in, Verdict& v) {
  const auto& L = need(in.l, "L");
  const auto& N = need(in.n, "N");
  const bool cm = is_cohen_macaulay(in.ring);
  if (!v.hypothesis("R Cohen-Macaulay", cm, yes(cm))) return;
  if (!v.hypothesis("L != 0", !is_zero(L), yes(!is_zero(L)))) return;
  CmProfile p = cm_profile(L);
  if (!v.hypothesis("L maximal Cohen-Macaulay", p.is_mcm, "depth " + std::to_string(p.depth))) return;
  FreeInfo f = is_free(L);
  if (!v.hypothesis("L not free", !f.free, yes(!f.free))) return;
  if (!v.hypothesis("N != 0", !is_zero(N), yes(!is_zero(N)))) return;
  PresentedModule M = in.m ? *in.m : syzygy_module(L, 1);
  PresentedModule T = tensor_product(M, N);
  PdVerdict pt = pd_of(T);
  IdVerdict it = id_of(T);
  certify(v, "pd(M (x) N)", pt);
  certify(v, "id(M (x) N)", it);
  v.check("pd(M (x) N) infinite", pt.infinite(), "Infinite", pd_kind(pt), T.to_string());
  v.check("id(M (x) N) infinite", it.infinite(), "Infinite", id_kind(it), T.to_string());
}

void check_cor_3_7(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  const auto& N = need(in.n, "N");
  const bool cm = is_cohen_macaulay(in.ring);
  if (!v.hypothesis("R Cohen-Macaulay", cm, yes(cm))) return;
  if (!v.hypothesis("M != 0", !is_zero(M), yes(!is_zero(M)))) return;
  if (!v.hypothesis("N != 0", !is_zero(N), yes(!is_zero(N)))) return;
  CmProfile p = cm_profile(M);
  if (!v.hypothesis("M maximal Cohen-Macaulay", p.is_mcm, "depth " + std::to_string(p.depth))) return;
  IdVerdict it = id_of(tensor_product(M, N));
  if (!v.hypothesis("id(M (x) N) finite", it.finite(), id_kind(it))) return;
  PresentedModule omega = canonical_module(in.ring);
  TraceResult tr = trace_submodule(M, omega);
  v.record("mu(N)", std::to_string(N.minimal().num_generators()));
  v.record("Hom(M, omega) generators", std::to_string(tr.hom_generators));
  v.check("trace of M in omega is omega", tr.equals_target, "true", yes(tr.equals_target), tr.trace.to_string());
}

void check_cor_3_12(const TheoremInputs& in, Verdict& v) {
  const auto& N = need(in.n, "N");
  const bool cm = is_cohen_macaulay(in.ring);
  if (!v.hypothesis("R Cohen-Macaulay", cm, yes(cm))) return;
  if (!v.hypothesis("N != 0", !is_zero(N), yes(!is_zero(N)))) return;
  const int d = ring_dim(in.ring);
  PresentedModule k = PresentedModule::residue_field(in.ring);
  PresentedModule M = d == 0 ? k : syzygy_module(k, d);
  v.record("M", "Omega^" + std::to_string(d) + " k");
  PresentedModule T = tensor_product(M, N);
  PdVerdict pt = pd_of(T);
  bool finite = pt.finite();
  std::string seen = "pd " + pd_kind(pt);
  if (!finite) {
    IdVerdict it = id_of(T);
    finite = it.finite();
    seen += ", id " + id_kind(it);
  }
  if (!v.hypothesis("pd(M (x) N) or id(M (x) N) finite", finite, seen)) return;
  const bool reg = is_regular(in.ring);
  v.check("R regular", reg, "true", yes(reg));
  PdVerdict pm = pd_of(M), pn = pd_of(N);
  v.check("pd M finite", pm.finite(), "Finite", pd_kind(pm));
  v.check("pd N finite", pn.finite(), "Finite", pd_kind(pn), N.to_string());
}

void check_cor_3_13(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  const auto& N = need(in.n, "N");
  const bool cm = is_cohen_macaulay(in.ring);
  if (!v.hypothesis("R Cohen-Macaulay", cm, yes(cm))) return;
  if (!v.hypothesis("M != 0", !is_zero(M), yes(!is_zero(M)))) return;
  if (!v.hypothesis("N != 0", !is_zero(N), yes(!is_zero(N)))) return;
  CmProfile p = cm_profile(M);
  if (!v.hypothesis("M Ulrich", p.is_ulrich,
                    "mcm " + yes(p.is_mcm) + ", e " + std::to_string(p.multiplicity) + ", mu " +
                        std::to_string(p.generators)))
    return;
  PdVerdict pt = pd_of(tensor_product(M, N));
  if (!v.hypothesis("pd(M (x) N) finite", pt.finite(), pd_kind(pt))) return;
  free_and_finite(M, N, v);
  const bool reg = is_regular(in.ring);
  v.check("R regular", reg, "true", yes(reg));
}

void check_fact_a1(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  const auto& N = need(in.n, "N");
  PresentedModule T = tensor_product(M, N);
  if (!v.hypothesis("M (x) N != 0", !is_zero(T), yes(!is_zero(T)))) return;
  FreeInfo ft = is_free(T);
  if (!v.hypothesis("M (x) N free", ft.free, yes(ft.free))) return;
  FreeInfo fm = is_free(M), fn = is_free(N);
  v.check("M free", fm.free, "true", yes(fm.free), M.minimal().to_string());
  v.check("N free", fn.free, "true", yes(fn.free), N.minimal().to_string());
}

void check_fact_a3(const TheoremInputs& in, Verdict& v) {
  const RingPtr& R = in.ring;
  if (in.sequence.empty()) throw AlgebraError("fact-A.3 needs a nonempty sequence");
  PresentedModule r = PresentedModule::free(R, {0});
  LinearSpan span(R->nvars());
  for (const auto& x : in.sequence) {
    Polynomial red = R->reduce(x);
    bool linear = !red.is_zero() && red.homogeneous_degree().degree == 1 &&
                  red.homogeneous_degree().kind == HomogeneousDegree::Kind::kDegree;
    if (!v.hypothesis(red.to_string() + " linear", linear, yes(linear))) return;
    bool nzd = nzd_test(red, r);
    if (!v.hypothesis(red.to_string() + " nonzerodivisor on R", nzd, yes(nzd))) return;
    span.add(linear_coefficients(red, R->nvars()));
  }
  const bool spans = span.rank() == R->nvars();
  if (!v.hypothesis("sequence generates the maximal ideal", spans, std::to_string(span.rank()) + " independent forms"))
    return;
  PresentedModule t = PresentedModule::cyclic(R, {in.sequence.front()});
  for (std::size_t i = 1; i < in.sequence.size(); ++i) t = tensor_product(t, PresentedModule::cyclic(R, {in.sequence[i]}));
  std::vector<std::int64_t> want(7, 0);
  want[0] = 1;
  v.expect("Hilbert function of the iterated tensor product, degrees 0..6", join(want),
           join(hilbert_series(t).hf_range(0, 6)), t.to_string());
  IsoComparison c = compare_iso(t, PresentedModule::residue_field(R));
  v.check("iterated tensor product matches k", c.equal, c.right, c.left);
}

void check_prop_a7(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  if (!v.hypothesis("M != 0", !is_zero(M), yes(!is_zero(M)))) return;
  const bool lf = locally_free_on_punctured_spectrum(M);
  if (!v.hypothesis("M locally free on the punctured spectrum", lf, yes(lf))) return;
  PdVerdict pm = pd_of(M);
  const int d = ring_depth(in.ring);
  const bool small = pm.finite() && 2 * pm.value <= d;
  if (!v.hypothesis("pd M <= depth R / 2", small, pd_kind(pm) + " vs depth " + std::to_string(d))) return;
  TorProfile t = tor(M, M, in.bound);
  v.check("Tor_i(M,M) = 0 for 1 <= i <= " + std::to_string(in.bound), t.vanishes_between(1, in.bound), "all zero",
          t.summary());
  PresentedModule T = tensor_product(M, M);
  PdVerdict pt = pd_of(T);
  v.check("pd(M (x) M) finite", pt.finite(), "Finite", pd_kind(pt), T.to_string());
}

void check_fact_3_6(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  const auto& N = need(in.n, "N");
  if (!v.hypothesis("M != 0", !is_zero(M), yes(!is_zero(M)))) return;
  CmProfile p = cm_profile(M);
  if (!v.hypothesis("M maximal Cohen-Macaulay", p.is_mcm, "depth " + std::to_string(p.depth))) return;
  if (!v.hypothesis("N != 0", !is_zero(N), yes(!is_zero(N)))) return;
  PdVerdict pn = pd_of(N);
  if (!v.hypothesis("pd N finite", pn.finite(), pd_kind(pn))) return;
  TorProfile t = tor(M, N, in.bound);
  v.check("Tor_i(M,N) = 0 for 1 <= i <= " + std::to_string(in.bound), t.vanishes_between(1, in.bound), "all zero",
          t.summary(), M.to_string() + " ; " + N.to_string());
}

void check_fact_3_9(const TheoremInputs& in, Verdict& v) {
  const auto& M = need(in.m, "M");
  const bool cm = is_cohen_macaulay(in.ring);
  if (!v.hypothesis("R Cohen-Macaulay", cm, yes(cm))) return;
  if (!v.hypothesis("M != 0", !is_zero(M), yes(!is_zero(M)))) return;
  PdVerdict pm = pd_of(M);
  if (!v.hypothesis("pd M finite", pm.finite(), pd_kind(pm))) return;
  PresentedModule T = tensor_product(M, canonical_module(in.ring));
  IdVerdict it = id_of(T);
  v.check("id(M (x) omega) finite", it.finite(), "Finite", id_kind(it), T.to_string());
}

using Checker = std::function<void(const TheoremInputs&, Verdict&)>;

const std::map<std::string, Checker, std::less<>>& checkers() {
  static const std::map<std::string, Checker, std::less<>> table = {
      {"thm-1.2", check_thm_1_2},   {"thm-1.4i", check_thm_1_4i}, {"thm-1.4ii", check_thm_1_4ii},
      {"cor-1.5", check_cor_1_5},   {"thm-1.6", check_thm_1_6},   {"cor-3.10", check_thm_1_6},
      {"cor-3.7", check_cor_3_7},   {"cor-3.12", check_cor_3_12}, {"cor-3.13", check_cor_3_13},
      {"fact-A.1", check_fact_a1},  {"fact-A.3", check_fact_a3},  {"prop-A.7", check_prop_a7},
      {"fact-3.6", check_fact_3_6}, {"fact-3.9", check_fact_3_9},
  };
  return table;
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, f] : checkers()) ids.push_back(id);
  return ids;
}

Verdict check_theorem_instance(std::string_view theorem_id, const TheoremInputs& inputs) {
  auto it = checkers().find(theorem_id);
  if (it == checkers().end()) throw AlgebraError("unknown theorem id '" + std::string(theorem_id) + "'");
  if (!inputs.ring) throw AlgebraError("theorem check needs a ring");
  Verdict v;
  v.id = std::string(theorem_id);
  v.kind = "theorem";
  v.ring = inputs.ring->description();
  try {
    it->second(inputs, v);
    if (!v.hypotheses_met()) {
      v.outcome = Outcome::kHypothesisNotMet;
    } else {
      v.outcome = v.conclusions_hold() ? Outcome::kPass : Outcome::kCritical;
    }
  } catch (const BoundExceeded& e) {
    v.outcome = Outcome::kBoundExceeded;
    v.note(e.what());
  } catch (const Inconclusive& e) {
    v.outcome = Outcome::kInconclusive;
    v.note(e.why);
  }
  if (v.critical()) record_critical(v);
  return v;
}

}  // namespace pdtensor
