#include <iostream>
#include <string>
#include <vector>

#include "lexcover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lexcover::cli::run(args, std::cout, std::cerr);
}
