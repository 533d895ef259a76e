#include "pdtensor/session_exec.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "pdtensor/catalog.hpp"
#include "pdtensor/instances.hpp"
#include "pdtensor/parallel.hpp"

namespace pdtensor {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kDefaultWindow = 4;
constexpr int kHfTop = 6;
constexpr int kDefaultHuntTrials = 200;

std::string task_text(const Task& t) {
  Session s;
  s.tasks.push_back(t);
  std::string text = render_session(s);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text.substr(std::string("task ").size());
}

Json int_array(const std::vector<int>& xs) {
  Json a = Json::array();
  for (int x : xs) a.push_back(x);
  return a;
}

Json int_array(const std::vector<std::int64_t>& xs) {
  Json a = Json::array();
  for (auto x : xs) a.push_back(x);
  return a;
}

int min_twist(const PresentedModule& m) {
  if (m.twists().empty()) return 0;
  return *std::min_element(m.twists().begin(), m.twists().end());
}

/// Generators, Hilbert series and a window of the Hilbert function.
void describe_module(Json& values, const PresentedModule& m) {
  const PresentedModule& mm = m.minimal();
  values["generator_degrees"] = int_array(mm.twists());
  values["relations"] = mm.relations().size();
  HilbertSeries h = hilbert_series(mm);
  values["hilbert_series"] = h.to_string();
  const int from = std::min(0, min_twist(mm));
  values["hf_from"] = from;
  values["hf"] = int_array(h.hf_range(from, kHfTop));
}

void pd_values(Json& values, const PdVerdict& v) {
  values["pd"] = pd_kind(v);
  values["verdict"] = v.to_string();
  if (v.infinite()) {
    values["certificate_index"] = v.certificate_index;
    values["certificate_rank"] = v.certificate_rank;
  }
}

struct Context {
  const Session& session;
  const ExecFlags& flags;
  std::map<std::string, PresentedModule> modules;

  const PresentedModule& module(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw AlgebraError("module '" + name + "' is not available");
    return it->second;
  }

  std::optional<RingPtr> ring(const std::string& name) const {
    auto it = session.env->rings.find(name);
    if (it == session.env->rings.end()) return std::nullopt;
    return it->second;
  }

  int window(const Task& t) const {
    if (flags.bound) return *flags.bound;
    auto it = t.options.find("bound");
    if (it != t.options.end()) return std::stoi(it->second);
    return kDefaultWindow;
  }
};

/// Runs one task; returns the module bound to its result name, if any.
std::optional<PresentedModule> run_task(const Context& ctx, const Task& t, Json& rec) {
  Json& values = rec["values"];
  auto arg = [&](std::size_t i) -> const std::string& { return t.args.at(i); };
  auto module_or_ring = [&](const std::string& name) {
    if (ctx.modules.count(name)) return ctx.module(name);
    auto r = ctx.ring(name);
    if (!r) throw AlgebraError("'" + name + "' is neither a module nor a ring");
    return PresentedModule::free(*r, {0});
  };
  auto produce = [&](PresentedModule m) {
    describe_module(values, m);
    return std::optional<PresentedModule>(std::move(m));
  };
  const std::string& op = t.op;

  if (op == "pd") {
    PdVerdict v = decide_pd(ctx.module(arg(0)));
    pd_values(values, v);
    if (v.kind == PdVerdict::Kind::kBoundExceeded) rec["status"] = "bound_exceeded";
  } else if (op == "id") {
    IdVerdict v = decide_id(ctx.module(arg(0)));
    values["id"] = id_kind(v);
    values["verdict"] = v.to_string();
    values["bass"] = int_array(v.bass);
    if (v.kind == IdVerdict::Kind::kBoundExceeded) rec["status"] = "bound_exceeded";
  } else if (op == "depth") {
    auto d = depth(module_or_ring(arg(0)));
    if (d) {
      values["depth"] = *d;
    } else {
      values["depth"] = "infinite";
    }
  } else if (op == "dim") {
    values["dim"] = hilbert_series(module_or_ring(arg(0))).dim;
  } else if (op == "betti" || op == "resolve") {
    const int b = ctx.window(t);
    Resolution res = minimal_resolution(ctx.module(arg(0)), b);
    values["bound"] = b;
    values["totals"] = int_array(res.betti.totals());
    values["complete"] = res.betti.complete;
    if (op == "resolve") {
      Json ranks = Json::array();
      for (const auto& f : res.complex.modules) ranks.push_back(f.size());
      values["ranks"] = ranks;
      values["composes_to_zero"] = res.complex.composes_to_zero();
      values["minimal"] = res.complex.all_entries_in_maximal_ideal();
    }
    rec["betti"] = render_betti(res.betti);
  } else if (op == "tensor") {
    return produce(tensor_product(ctx.module(arg(0)), ctx.module(arg(1))));
  } else if (op == "hom") {
    return produce(hom_module(ctx.module(arg(0)), ctx.module(arg(1))).module);
  } else if (op == "tor" || op == "ext") {
    const int b = ctx.window(t);
    FunctorProfile p = op == "tor" ? tor(ctx.module(arg(0)), ctx.module(arg(1)), b)
                                   : ext(ctx.module(arg(0)), ctx.module(arg(1)), b);
    values["bound"] = b;
    values["vanishing"] = p.summary();
    Json series = Json::array();
    for (const auto& h : p.series) series.push_back(h.to_string());
    values["series"] = series;
  } else if (op == "transpose") {
    return produce(auslander_transpose(ctx.module(arg(0))));
  } else if (op == "syzygy") {
    return produce(syzygy_module(ctx.module(arg(0)), std::stoi(arg(1))));
  } else if (op == "canonical") {
    auto r = ctx.ring(arg(0));
    if (!r) throw AlgebraError("'" + arg(0) + "' is not a ring");
    return produce(canonical_module(*r));
  } else if (op == "trace") {
    TraceResult tr = trace_submodule(ctx.module(arg(0)), ctx.module(arg(1)));
    values["equals_target"] = tr.equals_target;
    values["hom_generators"] = tr.hom_generators;
    return produce(tr.trace);
  } else if (op == "trcheck") {
    const int b = ctx.window(t);
    ReflexivityCheck c = totally_reflexive_check(ctx.module(arg(0)), b);
    values["verdict"] = c.to_string();
    values["biduality"] = c.biduality;
    values["ext_index"] = c.ext_index;
    values["transpose_ext_index"] = c.transpose_ext_index;
  } else if (op == "cmprofile") {
    CmProfile p = cm_profile(ctx.module(arg(0)));
    values["depth"] = p.depth;
    values["ring_dim"] = p.ring_dim;
    values["multiplicity"] = p.multiplicity;
    values["generators"] = p.generators;
    values["mcm"] = p.is_mcm;
    values["ulrich"] = p.is_ulrich;
  } else if (op == "example") {
    Json vs = Json::array();
    vs.push_back(verdict_json(run_example(arg(0)), ctx.flags.timing));
    rec["status"] = status_of_verdicts(vs);
    rec["verdicts"] = vs;
  } else if (op == "theorem") {
    TheoremInputs in;
    auto opt = [&](const char* k) -> std::optional<std::string> {
      auto it = t.options.find(k);
      if (it == t.options.end()) return std::nullopt;
      return it->second;
    };
    if (auto m = opt("m")) in.m = ctx.module(*m);
    if (auto n = opt("n")) in.n = ctx.module(*n);
    if (auto l = opt("l")) in.l = ctx.module(*l);
    if (auto r = opt("ring")) {
      in.ring = *ctx.ring(*r);
    } else if (in.m) {
      in.ring = in.m->ring();
    } else if (in.l) {
      in.ring = in.l->ring();
    } else if (in.n) {
      in.ring = in.n->ring();
    } else {
      throw AlgebraError("theorem task needs ring= or a module option");
    }
    if (auto s = opt("seq")) {
      std::istringstream is(*s);
      std::string piece;
      while (std::getline(is, piece, ',')) in.sequence.push_back(in.ring->parse(piece));
    }
    in.bound = ctx.window(t);
    Json vs = Json::array();
    vs.push_back(verdict_json(check_theorem_instance(arg(0), in), ctx.flags.timing));
    rec["status"] = status_of_verdicts(vs);
    rec["verdicts"] = vs;
  } else if (op == "hunt") {
    auto r = ctx.ring(arg(0));
    RingPtr ring = r ? *r : catalog_ring(arg(0));
    int trials = kDefaultHuntTrials;
    std::uint64_t seed = ctx.flags.seed;
    if (auto it = t.options.find("trials"); it != t.options.end()) trials = std::stoi(it->second);
    if (auto it = t.options.find("seed"); it != t.options.end()) seed = std::stoull(it->second);
    HuntReport h = hunt(ring, trials, hunt_default_params(), seed, 1);
    Json j = hunt_json(h, ctx.flags.timing);
    values = j["values"];
    values["seed"] = seed;
    rec["verdicts"] = j["verdicts"];
    rec["status"] = status_of_verdicts(rec["verdicts"]);
  } else {
    throw AlgebraError("unknown task op '" + op + "'");
  }
  return std::nullopt;
}

/// Wave index of each task: one more than the latest wave producing an operand.
std::vector<int> task_waves(const Session& s) {
  std::map<std::string, std::size_t> producer;
  std::vector<int> wave(s.tasks.size(), 0);
  for (std::size_t i = 0; i < s.tasks.size(); ++i) {
    for (const auto& name : s.tasks[i].operands()) {
      auto it = producer.find(name);
      if (it != producer.end()) wave[i] = std::max(wave[i], wave[it->second] + 1);
    }
    if (!s.tasks[i].result.empty()) producer[s.tasks[i].result] = i;
  }
  return wave;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

Json execute(const Session& session, const ExecFlags& flags) {
  Json doc = report_header("run", flags);
  Context ctx{session, flags, session.env->modules};
  const auto& tasks = session.tasks;
  std::vector<Json> records(tasks.size());
  std::vector<std::optional<PresentedModule>> produced(tasks.size());
  std::map<std::string, bool> failed_results;
  const std::vector<int> wave = task_waves(session);
  const int waves = tasks.empty() ? 0 : *std::max_element(wave.begin(), wave.end()) + 1;

  for (int w = 0; w < waves; ++w) {
    std::vector<std::size_t> batch;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (wave[i] != w) continue;
      records[i] = task_record(i + 1, tasks[i].op, task_text(tasks[i]));
      bool blocked = false;
      for (const auto& name : tasks[i].operands()) blocked = blocked || failed_results.count(name);
      if (blocked) {
        records[i]["status"] = "skipped";
        records[i]["error"] = "an operand was not produced";
        if (!tasks[i].result.empty()) failed_results[tasks[i].result] = true;
        continue;
      }
      batch.push_back(i);
    }
    parallel_for(batch.size(), flags.threads, [&](std::size_t k) {
      const std::size_t i = batch[k];
      Json& rec = records[i];
      ScopedEngineLimits limits(EngineLimits{flags.degree_cap});
      const auto start = Clock::now();
      try {
        produced[i] = run_task(ctx, tasks[i], rec);
      } catch (const BoundExceeded& e) {
        rec["status"] = "bound_exceeded";
        rec["error"] = e.what();
      } catch (const std::exception& e) {
        rec["status"] = "error";
        rec["error"] = e.what();
      }
      if (flags.timing) rec["seconds"] = seconds_since(start);
    });
    for (std::size_t i : batch) {
      if (tasks[i].result.empty()) continue;
      if (produced[i]) {
        ctx.modules.emplace(tasks[i].result, *produced[i]);
      } else {
        failed_results[tasks[i].result] = true;
      }
    }
  }
  for (auto& r : records) doc["tasks"].push_back(std::move(r));
  finalize_report(doc);
  return doc;
}

namespace {

using Job = std::function<Json()>;

Json verdict_record(std::size_t index, const std::string& op, const std::string& input, const Verdict& v,
                    bool timing) {
  Json rec = task_record(index, op, input);
  Json vs = Json::array();
  vs.push_back(verdict_json(v, timing));
  rec["status"] = status_of_verdicts(vs);
  rec["verdicts"] = vs;
  return rec;
}

Json guarded(std::size_t index, const std::string& op, const std::string& input, const ExecFlags& flags,
             const std::function<void(Json&)>& body) {
  Json rec = task_record(index, op, input);
  ScopedEngineLimits limits(EngineLimits{flags.degree_cap});
  const auto start = Clock::now();
  try {
    body(rec);
  } catch (const BoundExceeded& e) {
    rec["status"] = "bound_exceeded";
    rec["error"] = e.what();
  } catch (const std::exception& e) {
    rec["status"] = "error";
    rec["error"] = e.what();
  }
  if (flags.timing) rec["seconds"] = seconds_since(start);
  return rec;
}

Json example_record(std::size_t index, const std::string& id, const ExecFlags& flags) {
  return guarded(index, "example", "example " + id, flags, [&](Json& rec) {
    rec = verdict_record(index, "example", "example " + id, run_example(id), flags.timing);
  });
}

Json hunt_record(std::size_t index, const std::string& ring_id, int trials, std::uint64_t seed, int threads,
                 const ExecFlags& flags) {
  const std::string input = "hunt " + ring_id + " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);
  return guarded(index, "hunt", input, flags, [&](Json& rec) {
    HuntReport h = hunt(catalog_ring(ring_id), trials, hunt_default_params(), seed, threads);
    Json j = hunt_json(h, flags.timing);
    rec["values"] = j["values"];
    rec["values"]["seed"] = seed;
    rec["verdicts"] = j["verdicts"];
    rec["status"] = status_of_verdicts(rec["verdicts"]);
  });
}

Json run_jobs(Json doc, const std::vector<Job>& jobs, int threads) {
  std::vector<Json> records(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) { records[i] = jobs[i](); });
  for (auto& r : records) doc["tasks"].push_back(std::move(r));
  finalize_report(doc);
  return doc;
}

}  // namespace

Json run_paper_suite(const ExecFlags& flags) {
  std::vector<Job> jobs;
  auto next = [&] { return jobs.size() + 1; };
  for (const auto& id : example_ids()) {
    const std::size_t index = next();
    jobs.push_back([=, &flags] { return example_record(index, id, flags); });
  }
  auto cases = std::make_shared<std::vector<TheoremCase>>(paper_theorem_cases());
  for (std::size_t c = 0; c < cases->size(); ++c) {
    const std::size_t index = next();
    jobs.push_back([=, &flags] {
      const TheoremCase& tc = (*cases)[c];
      const std::string input = "theorem " + tc.label;
      return guarded(index, "theorem", input, flags, [&](Json& rec) {
        TheoremInputs in = tc.inputs;
        if (flags.bound) in.bound = *flags.bound;
        rec = verdict_record(index, "theorem", input, check_theorem_instance(tc.theorem_id, in), flags.timing);
      });
    });
  }
  {
    const std::size_t index = next();
    jobs.push_back([=, &flags] { return hunt_record(index, "R4", kPaperHuntTrials, flags.seed, 1, flags); });
  }
  const std::vector<std::string> suite_rings = {"R1", "R3", "R4", "R5", "R6"};
  for (std::size_t r = 0; r < suite_rings.size(); ++r) {
    const std::size_t index = next();
    const std::string ring_id = suite_rings[r];
    const std::uint64_t seed = splitmix64(flags.seed, 1000 + r);
    jobs.push_back([=, &flags] {
      const std::string input = "properties " + ring_id + " pairs=" + std::to_string(kPaperPropertyPairs) +
                                " seed=" + std::to_string(seed);
      return guarded(index, "properties", input, flags, [&](Json& rec) {
        PropertySuiteResult res = run_property_suite(ring_id, kPaperPropertyPairs, seed, 1);
        Json j = property_json(res, flags.timing);
        rec["values"] = j["values"];
        rec["verdicts"] = j["verdicts"];
        rec["status"] = status_of_verdicts(rec["verdicts"]);
      });
    });
  }
  return run_jobs(report_header("paper --all", flags), jobs, flags.threads);
}

Json run_paper_example(const std::string& id, const ExecFlags& flags) {
  paper_instance(id);
  Json doc = report_header("paper --example " + id, flags);
  doc["tasks"].push_back(example_record(1, id, flags));
  finalize_report(doc);
  return doc;
}

Json run_hunt_command(const std::string& ring_id, int trials, const ExecFlags& flags) {
  catalog_ring(ring_id);
  Json doc = report_header("hunt", flags);
  doc["tasks"].push_back(hunt_record(1, ring_id, trials, flags.seed, flags.threads, flags));
  finalize_report(doc);
  return doc;
}

Json run_oracle(const Session& session, const ExecFlags& flags) {
  Json doc = report_header("oracle", flags);
  const auto& env = *session.env;
  std::vector<Job> jobs;
  auto next = [&] { return jobs.size() + 1; };
  for (const auto& d : session.declarations) {
    if (d.kind != Declaration::Kind::kModule) continue;
    const std::size_t index = next();
    const PresentedModule m = env.modules.at(d.name);
    const std::string name = d.name;
    jobs.push_back([=, &flags] {
      return guarded(index, "hilbert", "hilbert " + name, flags, [&](Json& rec) {
        const int from = std::min(0, min_twist(m));
        rec["values"]["hf_from"] = from;
        rec["values"]["hf"] = int_array(oracle::hilbert_function(to_oracle(m), from, kHfTop));
      });
    });
  }
  for (const auto& t : session.tasks) {
    if (t.op != "tensor" && t.op != "tor") continue;
    const std::size_t index = next();
    const std::string input = task_text(t);
    if (!env.modules.count(t.args[0]) || !env.modules.count(t.args[1])) {
      jobs.push_back([=] {
        Json rec = task_record(index, t.op, input);
        rec["status"] = "skipped";
        rec["error"] = "the oracle reads declared modules only";
        return rec;
      });
      continue;
    }
    const PresentedModule m = env.modules.at(t.args[0]);
    const PresentedModule n = env.modules.at(t.args[1]);
    const std::string op = t.op;
    jobs.push_back([=, &flags] {
      return guarded(index, op, input, flags, [&](Json& rec) {
        const int from = std::min({0, min_twist(m) + min_twist(n)});
        const auto dims = oracle::tor_dims(to_oracle(m), to_oracle(n), op == "tor" ? 2 : 0, from, kHfTop);
        rec["values"]["hf_from"] = from;
        if (op == "tensor") {
          rec["values"]["hf"] = int_array(dims[0]);
        } else {
          for (std::size_t i = 0; i < dims.size(); ++i) rec["values"]["tor_" + std::to_string(i)] = int_array(dims[i]);
        }
      });
    });
  }
  return run_jobs(std::move(doc), jobs, flags.threads);
}

}  // namespace pdtensor
