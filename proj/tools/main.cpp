#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return giambelli::cli::run_cli(argc, argv, std::cout, std::cerr);
}
