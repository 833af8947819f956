#include <iostream>
#include <string>
#include <vector>

#include "freeprod/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return freeprod::cli::run(std::vector<std::string>(argv, argv + argc), std::cout);
}
