#include <iostream>
#include <string>
#include <vector>

#include "billiard/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return billiard::cli::run(args, std::cout, std::cerr);
}
