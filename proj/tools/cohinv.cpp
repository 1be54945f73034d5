#include <cohinv/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cohinv::run(std::move(args), std::cout, std::cerr);
}
