#include <iostream>
#include <string>
#include <vector>

#include "poincare/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const poincare::CommandResult r = poincare::execute(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
