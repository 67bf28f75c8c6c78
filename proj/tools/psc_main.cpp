#include <iostream>
#include <string>
#include <vector>

#include "psc/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return psc::cli_main(args, std::cout, std::cerr);
}
