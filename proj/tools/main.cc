#include <iostream>

#include "commands.h"

int main(int argc, char** argv) {
  return epigraph::cli::run_cli(argc, argv, std::cout, std::cerr);
}
