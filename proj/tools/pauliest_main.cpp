#include <string>
#include <vector>

#include "pauliest/cli.hpp"

int main(int argc, char** argv) {
  return pauliest::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
