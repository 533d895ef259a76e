#include "pdtensor/report.hpp"

#include <algorithm>
#include <sstream>

namespace pdtensor {

std::string render_betti(const BettiTable& table) {
  if (table.entries.empty()) return "zero module\n";
  int cols = table.computed_to + 1;
  int rlo = 0, rhi = 0;
  bool first = true;
  for (const auto& [key, b] : table.entries) {
    cols = std::max(cols, key.first + 1);
    const int r = key.second - key.first;
    rlo = first ? r : std::min(rlo, r);
    rhi = first ? r : std::max(rhi, r);
    first = false;
  }
  auto cell = [&](int i, int r) { return table.get(i, i + r); };
  std::size_t w = 1;
  for (int i = 0; i < cols; ++i) {
    w = std::max(w, std::to_string(i).size());
    w = std::max(w, std::to_string(table.total(i)).size());
    for (int r = rlo; r <= rhi; ++r) w = std::max(w, std::to_string(cell(i, r)).size());
  }
  std::size_t label = std::string("total:").size();
  for (int r = rlo; r <= rhi; ++r) label = std::max(label, std::to_string(r).size() + 1);
  auto pad = [](const std::string& s, std::size_t width) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  std::ostringstream os;
  os << pad("", label);
  for (int i = 0; i < cols; ++i) os << " " << pad(std::to_string(i), w);
  os << "\n" << pad("total:", label);
  for (int i = 0; i < cols; ++i) {
    const int t = table.total(i);
    os << " " << pad(t == 0 ? "-" : std::to_string(t), w);
  }
  os << "\n";
  for (int r = rlo; r <= rhi; ++r) {
    os << pad(std::to_string(r) + ":", label);
    for (int i = 0; i < cols; ++i) {
      const int b = cell(i, r);
      os << " " << pad(b == 0 ? "-" : std::to_string(b), w);
    }
    os << "\n";
  }
  return os.str();
}

namespace {

Json assertion_json(const Assertion& a) {
  Json j;
  j["name"] = a.name;
  if (a.asserted) j["expected"] = a.expected;
  j["computed"] = a.computed;
  j["asserted"] = a.asserted;
  j["passed"] = a.passed;
  if (!a.detail.empty()) j["detail"] = a.detail;
  return j;
}

}  // namespace

Json verdict_json(const Verdict& v, bool timing) {
  Json j;
  j["id"] = v.id;
  j["kind"] = v.kind;
  j["ring"] = v.ring;
  j["outcome"] = outcome_name(v.outcome);
  if (!v.hypotheses.empty()) {
    j["hypotheses"] = Json::array();
    for (const auto& h : v.hypotheses) j["hypotheses"].push_back(assertion_json(h));
  }
  j["assertions"] = Json::array();
  for (const auto& a : v.assertions) j["assertions"].push_back(assertion_json(a));
  if (!v.certificates.empty()) {
    Json c = Json::object();
    for (const auto& [k, val] : v.certificates) c[k] = val;
    j["certificates"] = c;
  }
  if (!v.notes.empty()) j["notes"] = v.notes;
  if (v.seed != 0) j["seed"] = v.seed;
  if (timing && v.seconds > 0) j["seconds"] = v.seconds;
  return j;
}

Json hunt_json(const HuntReport& r, bool timing) {
  Json j;
  j["trials"] = r.trials;
  j["zero_tensor"] = r.zero_tensor;
  j["finite_tensor"] = r.finite_tensor;
  j["bound_exceeded"] = r.bound_exceeded;
  j["kept"] = r.kept.size();
  Json vs = Json::array();
  for (const auto& v : r.kept) vs.push_back(verdict_json(v, timing));
  return Json{{"values", j}, {"verdicts", vs}};
}

Json property_json(const PropertySuiteResult& r, bool timing) {
  Json j;
  j["ring"] = r.ring_id;
  j["pairs"] = r.pairs;
  j["seed"] = r.seed;
  for (const auto& t : r.tallies) {
    j[t.theorem_id] = "hypotheses met " + std::to_string(t.hypothesis_met) + "/" + std::to_string(t.checked) +
                      ", violations " + std::to_string(t.violations) + ", skipped " + std::to_string(t.skipped);
  }
  Json vs = Json::array();
  for (const auto& v : r.violations) vs.push_back(verdict_json(v, timing));
  return Json{{"values", j}, {"verdicts", vs}};
}

Json task_record(std::size_t index, const std::string& op, const std::string& input) {
  Json j;
  j["index"] = index;
  j["op"] = op;
  j["input"] = input;
  j["status"] = "ok";
  j["values"] = Json::object();
  return j;
}

std::string status_of_verdicts(const Json& verdicts) {
  std::string status = "ok";
  for (const auto& v : verdicts) {
    const std::string o = v["outcome"].get<std::string>();
    if (o == "CRITICAL") return "critical";
    if (o == "fail") status = "failed";
    if (o == "bound exceeded" && status == "ok") status = "bound_exceeded";
  }
  return status;
}

Json report_header(const std::string& command, const ExecFlags& flags) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["engine"] = kEngineVersion;
  doc["command"] = command;
  doc["seed"] = flags.seed;
  doc["degree_cap"] = flags.degree_cap;
  if (flags.bound) doc["bound"] = *flags.bound;
  doc["tasks"] = Json::array();
  return doc;
}

void finalize_report(Json& doc) {
  int ok = 0, bound = 0, errors = 0, critical = 0, failed = 0, skipped = 0;
  for (const auto& t : doc["tasks"]) {
    const std::string s = t["status"].get<std::string>();
    if (s == "ok") ++ok;
    if (s == "bound_exceeded") ++bound;
    if (s == "error") ++errors;
    if (s == "critical") ++critical;
    if (s == "failed") ++failed;
    if (s == "skipped") ++skipped;
  }
  Json sum;
  sum["tasks"] = doc["tasks"].size();
  sum["ok"] = ok;
  sum["failed"] = failed;
  sum["bound_exceeded"] = bound;
  sum["errors"] = errors;
  sum["critical"] = critical;
  sum["skipped"] = skipped;
  doc["summary"] = sum;
  int code = kExitOk;
  if (critical) {
    code = kExitCritical;
  } else if (errors) {
    code = kExitUsage;
  } else if (bound) {
    code = kExitBoundExceeded;
  } else if (failed) {
    code = kExitExampleFailed;
  }
  doc["exit_code"] = code;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + scalar_text(x);
    return "[" + s + "]";
  }
  return v.dump();
}

void indent_block(std::ostringstream& os, const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) os << prefix << line << "\n";
}

void render_assertion(std::ostringstream& os, const Json& a, const char* tag) {
  std::string mark;
  if (std::string(tag) == "H") {
    mark = a["passed"].get<bool>() ? "given  " : "not met";
  } else if (!a["asserted"].get<bool>()) {
    mark = "value  ";
  } else {
    mark = a["passed"].get<bool>() ? "ok     " : "FAILED ";
  }
  const std::string computed = a["computed"].get<std::string>();
  const auto nl = computed.find('\n');
  os << "      " << mark << " " << a["name"].get<std::string>() << ": " << computed.substr(0, nl);
  if (a.contains("expected") && a["asserted"].get<bool>() && std::string(tag) != "H" && !a["passed"].get<bool>()) {
    os << " (expected " << a["expected"].get<std::string>() << ")";
  }
  os << "\n";
  if (nl != std::string::npos) indent_block(os, computed.substr(nl + 1), "          ");
  if (a.contains("detail")) indent_block(os, a["detail"].get<std::string>(), "          ");
}

void render_verdict(std::ostringstream& os, const Json& v) {
  os << "    verdict " << v["id"].get<std::string>() << " [" << v["kind"].get<std::string>() << "] over "
     << v["ring"].get<std::string>() << ": " << v["outcome"].get<std::string>();
  if (v.contains("seconds")) os << " (" << v["seconds"].dump() << " s)";
  os << "\n";
  if (v.contains("hypotheses")) {
    for (const auto& h : v["hypotheses"]) render_assertion(os, h, "H");
  }
  for (const auto& a : v["assertions"]) render_assertion(os, a, "A");
  if (v.contains("certificates")) {
    for (const auto& [k, c] : v["certificates"].items()) os << "      certificate " << k << ": " << scalar_text(c) << "\n";
  }
  if (v.contains("notes")) {
    for (const auto& n : v["notes"]) os << "      note: " << n.get<std::string>() << "\n";
  }
  if (v.contains("seed")) os << "      seed " << v["seed"].dump() << "\n";
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  os << doc["engine"].get<std::string>() << " " << doc["command"].get<std::string>() << " report ("
     << doc["schema"].get<std::string>() << "), seed " << doc["seed"].dump() << ", degree cap "
     << doc["degree_cap"].dump();
  if (doc.contains("bound")) os << ", bound " << doc["bound"].dump();
  os << "\n";
  for (const auto& t : doc["tasks"]) {
    os << "[" << t["index"].dump() << "] " << t["input"].get<std::string>() << ": " << t["status"].get<std::string>();
    if (t.contains("seconds")) os << " (" << t["seconds"].dump() << " s)";
    os << "\n";
    if (t.contains("error")) os << "    error: " << t["error"].get<std::string>() << "\n";
    for (const auto& [k, v] : t["values"].items()) os << "    " << k << " = " << scalar_text(v) << "\n";
    if (t.contains("betti")) indent_block(os, t["betti"].get<std::string>(), "    | ");
    if (t.contains("verdicts")) {
      for (const auto& v : t["verdicts"]) render_verdict(os, v);
    }
  }
  const Json& s = doc["summary"];
  os << "summary: " << s["tasks"].dump() << " tasks, " << s["ok"].dump() << " ok, " << s["failed"].dump()
     << " failed, " << s["bound_exceeded"].dump() << " bound exceeded, " << s["errors"].dump() << " errors, "
     << s["critical"].dump() << " critical, " << s["skipped"].dump() << " skipped; exit code "
     << doc["exit_code"].dump() << "\n";
  return os.str();
}

std::string render(const Json& doc, bool machine) { return machine ? doc.dump(2) + "\n" : render_text(doc); }

}  // namespace pdtensor
