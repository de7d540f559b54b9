#include <iostream>
#include <string>
#include <vector>

#include "lcoal_cli/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcoal::cli::run(args, std::cout, std::cerr);
}
