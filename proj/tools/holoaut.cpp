#include <iostream>
#include <sstream>

#include "holo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::ostringstream out;
  const int code = holo::cli::run(args, out, std::cerr);
  std::cout << out.str() << std::flush;
  return code;
}
