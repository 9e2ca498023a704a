#include <iostream>

#include "adsorb/run.hpp"

int main(int argc, char** argv) {
  return adsorb::run_cli(argc, argv, std::cout, std::cerr);
}
