#include <iostream>

#include "linkred/cli.hpp"

int main(int argc, char** argv) {
  return linkred::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
