#include <iostream>

#include "cantorfull/cli.hpp"

int main(int argc, char **argv)
{
  return cantorfull::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
