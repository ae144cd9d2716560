#pragma once

#include <functional>
#include <string>
#include <vector>

#include "antimagic/fixtures.hpp"
#include "antimagic/solver.hpp"

namespace antimagic {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int budget = 3;  // budget exhausted or only an interval known
inline constexpr int input = 4;   // unreadable or invalid input, violated precondition
}  // namespace exit_code

struct CommandResult {
  int exit = exit_code::ok;
  std::string output;   // JSON or CSV, goes to stdout
  std::string summary;  // one or two human-readable lines, goes to stderr
};

// args excludes the program name; read_stdin is called only by commands
// that read standard input.
CommandResult run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin = {});

struct TableCell {
  TableRow row;
  SolveReport report;
  std::string source;  // witness origin: solver or fixture
  bool match = false;
};

// Every summary-table row recomputed: fixture witnesses where a matrix
// exists, the solver otherwise.
std::vector<TableCell> compute_table(const std::string& dir, const SolveOptions& opts);

}  // namespace antimagic
