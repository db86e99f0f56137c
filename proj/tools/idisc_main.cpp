#include <iostream>
#include <string>
#include <vector>

#include "idisc/cli.hpp"

int main(int argc, char** argv) {
  return idisc::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
