#include <iostream>
#include <string>
#include <vector>

#include "hcomm/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const hcomm::CliResult result = hcomm::run_cli(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
