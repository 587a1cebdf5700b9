#include <iostream>  // for cout, cerr

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tolrep::cli::run(args, std::cout, std::cerr);
}
