#include <iostream>

#include "yao/commands.hpp"

int main(int argc, char** argv) {
  return yao::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
