#include <iostream>

#include "brunnel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const brunnel::CommandResult r = brunnel::run(args, std::cin);
  std::cout << r.out;
  for (const auto& d : r.diagnostics) std::cerr << "brunnel: " << d << "\n";
  return r.exit_code;
}
