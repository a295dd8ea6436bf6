#include <iostream>
#include <string>
#include <vector>

#include "polya/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const polya::cli::RunResult r = polya::cli::run(args, std::cin);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
