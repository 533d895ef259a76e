#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "pdtensor/catalog.hpp"
#include "pdtensor/instances.hpp"
#include "pdtensor/session.hpp"

namespace pdtensor {

SessionError::SessionError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct OpSpec {
  std::string op;
  /// m module, r ring, x module or ring, i integer, e example id, t theorem id, c ring or catalog id.
  std::string args;
  bool produces = false;
  std::vector<std::string> options;
};

const std::vector<OpSpec>& op_specs() {
  static const std::vector<OpSpec> specs = {
      {"pd", "m", false, {}},
      {"id", "m", false, {}},
      {"depth", "x", false, {}},
      {"dim", "x", false, {}},
      {"betti", "m", false, {"bound"}},
      {"resolve", "m", false, {"bound"}},
      {"tensor", "mm", true, {}},
      {"hom", "mm", true, {}},
      {"tor", "mm", false, {"bound"}},
      {"ext", "mm", false, {"bound"}},
      {"transpose", "m", true, {}},
      {"syzygy", "mi", true, {}},
      {"canonical", "r", true, {}},
      {"trace", "mm", true, {}},
      {"trcheck", "m", false, {"bound"}},
      {"cmprofile", "m", false, {}},
      {"example", "e", false, {}},
      {"theorem", "t", false, {"ring", "m", "n", "l", "seq", "bound"}},
      {"hunt", "c", false, {"trials", "seed"}},
  };
  return specs;
}

const OpSpec* find_op(const std::string& op) {
  for (const auto& s : op_specs()) {
    if (s.op == op) return &s;
  }
  return nullptr;
}

struct Token {
  enum class Kind { kWord, kGroup, kSymbol };
  Kind kind;
  std::string text;
  std::size_t column;
};

bool is_symbol(char c) { return c == '=' || c == '/' || c == ':'; }

std::vector<Token> tokenize(const std::string& line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (c == '(') {
      int depth = 1;
      std::size_t j = i + 1;
      while (j < line.size() && depth > 0) {
        if (line[j] == '(') ++depth;
        if (line[j] == ')') --depth;
        ++j;
      }
      if (depth != 0) throw SessionError(lineno, i + 1, "unclosed '('");
      out.push_back({Token::Kind::kGroup, line.substr(i + 1, j - i - 2), i + 2});
      i = j;
      continue;
    }
    if (c == ')') throw SessionError(lineno, i + 1, "unmatched ')'");
    if (c == ',') throw SessionError(lineno, i + 1, "unexpected ','");
    if (is_symbol(c)) {
      out.push_back({Token::Kind::kSymbol, std::string(1, c), i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '(' && line[j] != ')' &&
           line[j] != ',' && line[j] != '#' && !is_symbol(line[j])) {
      ++j;
    }
    out.push_back({Token::Kind::kWord, line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

struct Piece {
  std::string text;
  std::size_t column;
};

/// Splits group text at top-level commas, trimming each piece.
std::vector<Piece> split_group(const Token& g) {
  std::vector<Piece> out;
  std::size_t start = 0;
  int depth = 0;
  auto push = [&](std::size_t end) {
    std::size_t a = start, b = end;
    while (a < b && std::isspace(static_cast<unsigned char>(g.text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(g.text[b - 1]))) --b;
    out.push_back({g.text.substr(a, b - a), g.column + a});
  };
  for (std::size_t i = 0; i < g.text.size(); ++i) {
    if (g.text[i] == '(') ++depth;
    if (g.text[i] == ')') --depth;
    if (g.text[i] == ',' && depth == 0) {
      push(i);
      start = i + 1;
    }
  }
  push(g.text.size());
  if (out.size() == 1 && out[0].text.empty()) out.clear();
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::optional<long long> to_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t pos = 0;
  try {
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

class Parser {
 public:
  Session run(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      toks_ = tokenize(line, lineno);
      pos_ = 0;
      line_ = lineno;
      if (toks_.empty()) continue;
      statement();
    }
    return std::move(session_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool done() const { return pos_ >= toks_.size(); }
  std::size_t end_column() const { return toks_.empty() ? 1 : toks_.back().column + toks_.back().text.size(); }

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const { throw SessionError(line_, column, msg); }
  [[noreturn]] void fail_here(const std::string& msg) const { fail(done() ? end_column() : peek().column, msg); }

  const Token& take() {
    if (done()) fail_here("unexpected end of line");
    return toks_[pos_++];
  }
  std::string word(const char* what) {
    if (done() || peek().kind != Token::Kind::kWord) fail_here(std::string("expected ") + what);
    return take().text;
  }
  void keyword(const char* kw) {
    if (done() || peek().kind != Token::Kind::kWord || peek().text != kw) fail_here(std::string("expected '") + kw + "'");
    ++pos_;
  }
  void symbol(char c) {
    if (done() || peek().kind != Token::Kind::kSymbol || peek().text[0] != c) {
      fail_here(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  const Token& group(const char* what) {
    if (done() || peek().kind != Token::Kind::kGroup) fail_here(std::string("expected ( ") + what + " )");
    return take();
  }
  void end() {
    if (!done()) fail_here("unexpected '" + peek().text + "'");
  }

  void fresh_name(const std::string& name, std::size_t column) {
    if (!is_identifier(name)) fail(column, "invalid name '" + name + "'");
    if (names_.count(name)) fail(column, "name '" + name + "' is already declared");
    names_.insert(name);
  }

  RingPtr ring_named(const std::string& name, std::size_t column) const {
    auto it = session_.env->rings.find(name);
    if (it == session_.env->rings.end()) fail(column, "undeclared ring '" + name + "'");
    return it->second;
  }
  const PresentedModule& module_named(const std::string& name, std::size_t column) const {
    auto it = session_.env->modules.find(name);
    if (it == session_.env->modules.end()) fail(column, "undeclared module '" + name + "'");
    return it->second;
  }

  Polynomial poly(const RingPtr& ring, const Piece& p) const {
    if (p.text.empty()) fail(p.column, "empty polynomial");
    try {
      return parse_polynomial(ring->ambient(), p.text);
    } catch (const ParseError& e) {
      fail(p.column + e.column() - 1, e.what());
    } catch (const AlgebraError& e) {
      fail(p.column, e.what());
    }
  }

  std::vector<Polynomial> homogeneous_list(const RingPtr& ring, const Token& g, std::vector<std::string>& canon) {
    std::vector<Polynomial> out;
    for (const auto& piece : split_group(g)) {
      Polynomial p = poly(ring, piece);
      HomogeneousDegree h = p.homogeneous_degree();
      if (!h.is_homogeneous()) fail(piece.column, "inhomogeneous generator '" + piece.text + "'");
      if (p.is_zero() || h.degree == 0) fail(piece.column, "ideal generator '" + piece.text + "' must have positive degree");
      canon.push_back(p.to_string());
      out.push_back(std::move(p));
    }
    if (out.empty()) fail(g.column, "empty generator list");
    return out;
  }

  /// Entries of a relation or image vector, checked against the target twists.
  FreeVector homogeneous_vector(const RingPtr& ring, const Token& g, const std::vector<int>& twists,
                                std::vector<std::string>& canon, std::optional<int> want_degree) {
    std::vector<Piece> pieces = split_group(g);
    if (pieces.size() != twists.size()) {
      fail(g.column, "vector (" + g.text + ") has " + std::to_string(pieces.size()) + " entries, expected " +
                         std::to_string(twists.size()));
    }
    std::vector<Polynomial> entries;
    std::optional<int> degree = want_degree;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      Polynomial p = poly(ring, pieces[i]);
      HomogeneousDegree h = p.homogeneous_degree();
      if (!h.is_homogeneous()) fail(pieces[i].column, "inhomogeneous entry '" + pieces[i].text + "'");
      if (!p.is_zero()) {
        const int d = h.degree + twists[i];
        if (degree && *degree != d) {
          fail(pieces[i].column, "inhomogeneous vector (" + g.text + "): entry '" + pieces[i].text + "' has degree " +
                                     std::to_string(d) + ", expected " + std::to_string(*degree));
        }
        degree = d;
      }
      canon.push_back(p.to_string());
      entries.push_back(ring->reduce(p));
    }
    ModuleOrder order = PresentedModule::free(ring, twists).order();
    return vec::from_components(entries, order);
  }

  void statement() {
    const Token& head = take();
    if (head.kind != Token::Kind::kWord) fail(head.column, "expected a declaration or 'task'");
    const std::string& kw = head.text;
    if (kw == "field") return field_decl();
    if (kw == "ring") return ring_decl();
    if (kw == "quotient") return quotient_decl();
    if (kw == "module") return module_decl();
    if (kw == "map") return map_decl();
    if (kw == "task") return task_decl();
    fail(head.column, "unknown statement '" + kw + "'");
  }

  void field_decl() {
    Declaration d;
    d.kind = Declaration::Kind::kField;
    d.line = line_;
    std::size_t col = done() ? end_column() : peek().column;
    std::string f = word("QQ or GF");
    if (f == "QQ") {
      field_ = Field::rationals();
    } else if (f == "GF") {
      col = done() ? end_column() : peek().column;
      auto p = to_int(word("a prime"));
      try {
        if (!p || *p < 2 || *p > 0xffffffffLL) throw AlgebraError("bad modulus");
        field_ = Field::prime(static_cast<std::uint32_t>(*p));
      } catch (const AlgebraError&) {
        fail(col, "GF needs a prime modulus");
      }
      d.characteristic = field_.characteristic();
    } else {
      fail(col, "unknown field '" + f + "'");
    }
    end();
    session_.declarations.push_back(d);
  }

  void ring_decl() {
    Declaration d;
    d.kind = Declaration::Kind::kRing;
    d.line = line_;
    std::size_t col = done() ? end_column() : peek().column;
    d.name = word("a ring name");
    fresh_name(d.name, col);
    col = done() ? end_column() : peek().column;
    std::string mode = word("'vars' or 'catalog'");
    RingPtr ring;
    if (mode == "catalog") {
      col = done() ? end_column() : peek().column;
      d.catalog = word("a catalog id");
      try {
        ring = catalog_ring(d.catalog);
      } catch (const AlgebraError& e) {
        fail(col, e.what());
      }
      end();
      session_.env->rings[d.name] = ring;
      session_.declarations.push_back(d);
      return;
    }
    if (mode != "vars") fail(col, "expected 'vars' or 'catalog'");
    while (!done() && peek().kind == Token::Kind::kWord) {
      const Token& v = take();
      if (!is_identifier(v.text)) fail(v.column, "invalid variable name '" + v.text + "'");
      if (std::find(d.vars.begin(), d.vars.end(), v.text) != d.vars.end()) fail(v.column, "repeated variable '" + v.text + "'");
      d.vars.push_back(v.text);
    }
    if (d.vars.empty()) fail_here("expected at least one variable");
    if (d.vars.size() > kMaxVariables) fail(col, "at most 8 variables are supported");
    PolyRingPtr s = PolyRing::make(field_, d.vars);
    std::vector<Polynomial> ideal;
    if (!done()) {
      symbol('/');
      RingPtr base = quotient_ring(s, {});
      ideal = homogeneous_list(base, group("ideal generators"), d.ideal);
    }
    end();
    d.characteristic = field_.characteristic();
    try {
      ring = quotient_ring(s, ideal);
    } catch (const AlgebraError& e) {
      fail(col, e.what());
    }
    session_.env->rings[d.name] = ring;
    session_.declarations.push_back(d);
  }

  void quotient_decl() {
    Declaration d;
    d.kind = Declaration::Kind::kQuotient;
    d.line = line_;
    std::size_t col = done() ? end_column() : peek().column;
    d.name = word("a ring name");
    fresh_name(d.name, col);
    symbol('=');
    col = done() ? end_column() : peek().column;
    d.base = word("a ring name");
    RingPtr base = ring_named(d.base, col);
    symbol('/');
    const Token& g = group("ideal generators");
    std::vector<Polynomial> extra = homogeneous_list(base, g, d.ideal);
    end();
    std::vector<Polynomial> all = base->ideal_basis();
    all.insert(all.end(), extra.begin(), extra.end());
    try {
      session_.env->rings[d.name] = quotient_ring(base->ambient(), all);
    } catch (const AlgebraError& e) {
      fail(g.column, e.what());
    }
    session_.declarations.push_back(d);
  }

  void module_decl() {
    Declaration d;
    d.kind = Declaration::Kind::kModule;
    d.line = line_;
    std::size_t col = done() ? end_column() : peek().column;
    d.name = word("a module name");
    fresh_name(d.name, col);
    keyword("over");
    col = done() ? end_column() : peek().column;
    d.base = word("a ring name");
    RingPtr ring = ring_named(d.base, col);
    if (!done() && peek().kind == Token::Kind::kWord && peek().text == "residue") {
      ++pos_;
      end();
      d.residue = true;
      session_.env->modules[d.name] = PresentedModule::residue_field(ring);
      session_.declarations.push_back(d);
      return;
    }
    keyword("gens");
    while (!done() && peek().kind == Token::Kind::kWord && peek().text != "rels") {
      const Token& t = take();
      auto v = to_int(t.text);
      if (!v) fail(t.column, "expected an integer twist, got '" + t.text + "'");
      d.twists.push_back(static_cast<int>(*v));
    }
    if (d.twists.empty()) fail_here("expected at least one generator twist");
    std::vector<FreeVector> rels;
    if (!done()) {
      keyword("rels");
      while (!done()) {
        const Token& g = group("relation vector");
        d.vectors.emplace_back();
        rels.push_back(homogeneous_vector(ring, g, d.twists, d.vectors.back(), std::nullopt));
      }
    }
    try {
      session_.env->modules[d.name] = PresentedModule(ring, d.twists, rels);
    } catch (const AlgebraError& e) {
      fail(col, e.what());
    }
    session_.declarations.push_back(d);
  }

  void map_decl() {
    Declaration d;
    d.kind = Declaration::Kind::kMap;
    d.line = line_;
    std::size_t col = done() ? end_column() : peek().column;
    d.name = word("a map name");
    fresh_name(d.name, col);
    symbol(':');
    std::size_t scol = done() ? end_column() : peek().column;
    d.source = word("a source module");
    const PresentedModule& src = module_named(d.source, scol);
    keyword("->");
    std::size_t tcol = done() ? end_column() : peek().column;
    d.target = word("a target module");
    const PresentedModule& tgt = module_named(d.target, tcol);
    if (src.ring() != tgt.ring()) fail(tcol, "source and target live over different rings");
    if (!done() && peek().kind == Token::Kind::kWord && peek().text == "degree") {
      ++pos_;
      std::size_t dcol = done() ? end_column() : peek().column;
      auto v = to_int(word("an integer degree"));
      if (!v) fail(dcol, "expected an integer degree");
      d.degree = static_cast<int>(*v);
    }
    keyword("images");
    std::vector<FreeVector> images;
    while (!done()) {
      const Token& g = group("image vector");
      const std::size_t k = images.size();
      if (k >= src.num_generators()) fail(g.column, "more images than source generators");
      d.vectors.emplace_back();
      images.push_back(homogeneous_vector(tgt.ring(), g, tgt.twists(), d.vectors.back(), src.twists()[k] + d.degree));
    }
    if (images.size() != src.num_generators()) {
      fail_here("expected " + std::to_string(src.num_generators()) + " image vectors");
    }
    try {
      session_.env->maps.emplace(d.name, ModuleMap(src, tgt, images, d.degree));
    } catch (const AlgebraError& e) {
      fail(col, std::string("map is not well defined: ") + e.what());
    }
    session_.declarations.push_back(d);
  }

  void operand(char kind, const Token& t) {
    const bool ring = session_.env->rings.count(t.text) > 0;
    const bool module = session_.env->modules.count(t.text) > 0 || results_.count(t.text) > 0;
    switch (kind) {
      case 'm':
        if (!module) fail(t.column, ring ? "'" + t.text + "' is a ring, expected a module" : "undeclared module '" + t.text + "'");
        break;
      case 'r':
        if (!ring) fail(t.column, "undeclared ring '" + t.text + "'");
        break;
      case 'x':
        if (!ring && !module) fail(t.column, "undeclared name '" + t.text + "'");
        break;
      case 'i':
        if (!to_int(t.text)) fail(t.column, "expected an integer, got '" + t.text + "'");
        break;
      case 'e': {
        auto ids = example_ids();
        if (std::find(ids.begin(), ids.end(), t.text) == ids.end()) fail(t.column, "unknown example id '" + t.text + "'");
        break;
      }
      case 't': {
        auto ids = theorem_ids();
        if (std::find(ids.begin(), ids.end(), t.text) == ids.end()) fail(t.column, "unknown theorem id '" + t.text + "'");
        break;
      }
      case 'c': {
        auto ids = catalog_ids();
        if (!ring && std::find(ids.begin(), ids.end(), t.text) == ids.end()) {
          fail(t.column, "unknown ring '" + t.text + "'");
        }
        break;
      }
    }
  }

  void task_decl() {
    Task task;
    task.line = line_;
    std::size_t col = done() ? end_column() : peek().column;
    task.op = word("a task op");
    const OpSpec* spec = find_op(task.op);
    if (!spec) fail(col, "unknown task op '" + task.op + "'");
    for (char kind : spec->args) {
      if (done() || peek().kind != Token::Kind::kWord) fail_here("task " + task.op + " expects more operands");
      const Token& t = take();
      operand(kind, t);
      task.args.push_back(t.text);
    }
    while (!done()) {
      const Token& t = take();
      if (t.kind != Token::Kind::kWord) fail(t.column, "unexpected '" + t.text + "'");
      if (t.text == "as") {
        if (!spec->produces) fail(t.column, "task " + task.op + " does not produce a module");
        std::size_t rcol = done() ? end_column() : peek().column;
        task.result = word("a result name");
        fresh_name(task.result, rcol);
        results_.insert(task.result);
        end();
        break;
      }
      if (std::find(spec->options.begin(), spec->options.end(), t.text) == spec->options.end()) {
        fail(t.column, "task " + task.op + " has no option '" + t.text + "'");
      }
      if (task.options.count(t.text)) fail(t.column, "repeated option '" + t.text + "'");
      symbol('=');
      if (t.text == "seq") {
        const Token& g = group("polynomial list");
        auto it = task.options.find("ring");
        if (it == task.options.end()) fail(g.column, "option seq needs a preceding ring= option");
        RingPtr r = ring_named(it->second, g.column);
        std::vector<std::string> canon;
        homogeneous_list(r, g, canon);
        std::string s;
        for (const auto& c : canon) s += (s.empty() ? "" : ", ") + c;
        task.options["seq"] = s;
        continue;
      }
      const Token& v = take();
      if (v.kind != Token::Kind::kWord) fail(v.column, "expected a value for option '" + t.text + "'");
      if (t.text == "ring") {
        ring_named(v.text, v.column);
      } else if (t.text == "m" || t.text == "n" || t.text == "l") {
        operand('m', v);
      } else {
        auto n = to_int(v.text);
        if (!n || *n < 0) fail(v.column, "option '" + t.text + "' needs a nonnegative integer");
      }
      task.options[t.text] = v.text;
    }
    session_.tasks.push_back(std::move(task));
  }

  Session session_;
  Field field_ = Field::rationals();
  std::set<std::string> names_;
  std::set<std::string> results_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

}  // namespace

bool Declaration::operator==(const Declaration& o) const {
  return kind == o.kind && name == o.name && characteristic == o.characteristic && vars == o.vars &&
         catalog == o.catalog && base == o.base && ideal == o.ideal && residue == o.residue && twists == o.twists &&
         vectors == o.vectors && source == o.source && target == o.target && degree == o.degree;
}

bool Task::operator==(const Task& o) const {
  return op == o.op && args == o.args && options == o.options && result == o.result;
}

std::vector<std::string> Task::operands() const {
  std::vector<std::string> out;
  const OpSpec* spec = find_op(op);
  for (std::size_t i = 0; i < args.size() && spec && i < spec->args.size(); ++i) {
    char k = spec->args[i];
    if (k == 'm' || k == 'r' || k == 'x' || k == 'c') out.push_back(args[i]);
  }
  for (const char* key : {"ring", "m", "n", "l"}) {
    auto it = options.find(key);
    if (it != options.end()) out.push_back(it->second);
  }
  return out;
}

Session parse_session(std::string_view text) { return Parser().run(text); }

const std::vector<std::string>& task_ops() {
  static const std::vector<std::string> ops = [] {
    std::vector<std::string> v;
    for (const auto& s : op_specs()) v.push_back(s.op);
    return v;
  }();
  return ops;
}

std::string render_session(const Session& s) {
  std::ostringstream os;
  for (const auto& d : s.declarations) {
    switch (d.kind) {
      case Declaration::Kind::kField:
        os << "field " << (d.characteristic == 0 ? "QQ" : "GF " + std::to_string(d.characteristic)) << "\n";
        break;
      case Declaration::Kind::kRing:
        os << "ring " << d.name;
        if (!d.catalog.empty()) {
          os << " catalog " << d.catalog << "\n";
          break;
        }
        os << " vars " << join(d.vars, " ");
        if (!d.ideal.empty()) os << " / (" << join(d.ideal, ", ") << ")";
        os << "\n";
        break;
      case Declaration::Kind::kQuotient:
        os << "quotient " << d.name << " = " << d.base << " / (" << join(d.ideal, ", ") << ")\n";
        break;
      case Declaration::Kind::kModule: {
        os << "module " << d.name << " over " << d.base;
        if (d.residue) {
          os << " residue\n";
          break;
        }
        std::vector<std::string> tw;
        for (int t : d.twists) tw.push_back(std::to_string(t));
        os << " gens " << join(tw, " ");
        if (!d.vectors.empty()) {
          os << " rels";
          for (const auto& v : d.vectors) os << " (" << join(v, ", ") << ")";
        }
        os << "\n";
        break;
      }
      case Declaration::Kind::kMap:
        os << "map " << d.name << " : " << d.source << " -> " << d.target;
        if (d.degree != 0) os << " degree " << d.degree;
        os << " images";
        for (const auto& v : d.vectors) os << " (" << join(v, ", ") << ")";
        os << "\n";
        break;
    }
  }
  for (const auto& t : s.tasks) {
    os << "task " << t.op;
    for (const auto& a : t.args) os << " " << a;
    // ring= must precede seq= so the sequence can be parsed.
    auto ring = t.options.find("ring");
    if (ring != t.options.end()) os << " ring=" << ring->second;
    for (const auto& [k, v] : t.options) {
      if (k == "ring") continue;
      os << " " << k << "=" << (k == "seq" ? "(" + v + ")" : v);
    }
    if (!t.result.empty()) os << " as " << t.result;
    os << "\n";
  }
  return os.str();
}

}  // namespace pdtensor
