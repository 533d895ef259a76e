#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pdtensor/module.hpp"

namespace pdtensor {

/// Parse or validation failure at a 1-based line and column.
class SessionError : public std::runtime_error {
 public:
  SessionError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct Declaration {
  enum class Kind { kField, kRing, kQuotient, kModule, kMap };
  Kind kind = Kind::kField;
  std::string name;
  std::size_t line = 0;
  /// kField: 0 for QQ, else the prime.
  std::uint32_t characteristic = 0;
  /// kRing: variables, optional inline ideal, or a catalog id.
  std::vector<std::string> vars;
  std::string catalog;
  /// kQuotient: base ring; kModule: ring.
  std::string base;
  /// Ideal generators (kRing inline, kQuotient), canonical text.
  std::vector<std::string> ideal;
  /// kModule.
  bool residue = false;
  std::vector<int> twists;
  /// kModule relations or kMap images, entries in canonical text.
  std::vector<std::vector<std::string>> vectors;
  /// kMap.
  std::string source;
  std::string target;
  int degree = 0;

  /// Ignores the source line.
  bool operator==(const Declaration& o) const;
};

struct Task {
  std::string op;
  std::vector<std::string> args;
  std::map<std::string, std::string> options;
  /// Name bound to the module the task produces.
  std::string result;
  std::size_t line = 0;

  /// Names of declared or produced objects the task reads.
  std::vector<std::string> operands() const;
  /// Ignores the source line.
  bool operator==(const Task& o) const;
};

/// Objects built while parsing; tasks may add modules under their result names.
struct SessionEnvironment {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, PresentedModule> modules;
  std::map<std::string, ModuleMap> maps;
};

struct Session {
  std::vector<Declaration> declarations;
  std::vector<Task> tasks;
  std::shared_ptr<SessionEnvironment> env = std::make_shared<SessionEnvironment>();

  /// Structural equality of declarations and tasks.
  bool operator==(const Session& o) const { return declarations == o.declarations && tasks == o.tasks; }
};

/// Throws SessionError on syntax errors, undeclared or reused names,
/// inhomogeneous data and ill-defined maps.
Session parse_session(std::string_view text);

/// Canonical printer: parse_session(render_session(s)) == s.
std::string render_session(const Session& s);

/// Known task ops.
const std::vector<std::string>& task_ops();

}  // namespace pdtensor
