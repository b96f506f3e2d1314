#include <iostream>
#include <vector>

#include "homlie/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return homlie::run_command(args, std::cout, std::cerr);
}
