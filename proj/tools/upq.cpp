#include <iostream>

#include "upq/cli.hpp"

int main(int argc, char** argv) {
  return upq::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
