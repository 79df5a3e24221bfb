#include <vector>

#include "stabletool/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stabletool::run_cli(args);
}
