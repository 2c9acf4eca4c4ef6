#include "liepres/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
  return liepres::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
