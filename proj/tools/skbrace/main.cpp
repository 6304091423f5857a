#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skb::cli::run_command(args, std::cout, std::cerr);
}
