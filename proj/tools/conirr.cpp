#include <iostream>

#include "conirr/cli.hpp"

int main(int argc, char** argv) {
  return conirr::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
