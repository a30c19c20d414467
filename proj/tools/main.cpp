#include <iostream>

#include "idealspace/cli.hpp"

int main(int argc, char** argv) {
  return idealspace::cli::execute(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
