#include <iostream>
#include <string>
#include <vector>

#include "tvg/cli.hpp"

int main(int argc, char** argv) {
  return tvg::cli_main(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
