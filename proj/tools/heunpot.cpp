#include <iostream>

#include "heunpot/app/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return heunpot::app::run_cli(args, std::cout, std::cerr);
}
