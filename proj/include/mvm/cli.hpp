#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvm::cli {

// Exit codes: 0 on success, 1 when the mathematics disagrees (an
// associativity violation, an unmatched table, a failed report check),
// 2 on usage or input errors.
struct CommandOutcome {
  int exit_code = 0;
  std::string payload;  // machine-readable output for stdout
};

// Runs one subcommand (check, classify, enumerate, family, report).
// `input` backs the "-" stdin convention; diagnostics go to `diag`.
CommandOutcome run(const std::vector<std::string>& args, std::istream& input,
                   std::ostream& diag);

}  // namespace mvm::cli
