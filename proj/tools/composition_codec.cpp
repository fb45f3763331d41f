#include "compcodec/cli.hpp"
#include "compcodec/sweep.hpp"

#include <iostream>

int main(int argc, char** argv) {
  compcodec::configure_threads_from_env();
  std::vector<std::string> args(argv + 1, argv + argc);
  return compcodec::cli::run(args, std::cin, std::cout, std::cerr);
}
