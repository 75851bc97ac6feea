#include <iostream>
#include <string>
#include <vector>

#include "mvm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const mvm::cli::CommandOutcome outcome =
      mvm::cli::run(args, std::cin, std::cerr);
  std::cout << outcome.payload;
  return outcome.exit_code;
}
