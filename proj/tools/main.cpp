#include <string>
#include <vector>

#include "shadows/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return shadows::run_cli(std::move(args));
}
