#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hgterm/box.hpp"

namespace hgterm::cli {

enum class Action { check, decompose, structure, factorial, pochhammer, eval, compare };

struct Command {
  Action action = Action::check;
  std::string input;
  std::optional<std::string> output;
  /// "a:b,c:d" per axis; checked against k once the spec is read.
  std::optional<std::string> window;
  /// "z1,...,zk"
  std::optional<std::string> at;
  /// "z1,...,zk=p/q"
  std::optional<std::string> seed;
  bool text = false;
  int verbosity = 0;
};

enum ExitCode { kSuccess = 0, kMathFailure = 1, kUsage = 2 };

/// Executes a parsed command, writing the result to `out` (or the output
/// file) and diagnostics to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv and runs; usage errors exit with kUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "a:b,c:d" with exactly k ranges; throws PreconditionError otherwise.
Window parse_window(const std::string& text, std::size_t k);
IntVec parse_point(const std::string& text, std::size_t k);

}  // namespace hgterm::cli
